#include "kvn/phase_space/snapshot.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "kvn/errors.hpp"

namespace kvn::phase_space {

namespace {

constexpr char kMagic[8] = {'K', 'V', 'N', 'S', 'N', 'A', 'P', '1'};
constexpr std::size_t kHeaderBytes = 64;

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  for (int b = 0; b < 4; ++b) out.push_back(static_cast<unsigned char>(v >> (8 * b)));
}

void put_f64(std::vector<unsigned char>& out, double x) {
  const auto v = std::bit_cast<std::uint64_t>(x);
  for (int b = 0; b < 8; ++b) out.push_back(static_cast<unsigned char>(v >> (8 * b)));
}

std::uint32_t get_u32(const unsigned char* p) {
  std::uint32_t v = 0;
  for (int b = 0; b < 4; ++b) v |= static_cast<std::uint32_t>(p[b]) << (8 * b);
  return v;
}

double get_f64(const unsigned char* p) {
  std::uint64_t v = 0;
  for (int b = 0; b < 8; ++b) v |= static_cast<std::uint64_t>(p[b]) << (8 * b);
  return std::bit_cast<double>(v);
}

const char* axis_name(Representation r, int axis) {
  switch (r) {
    case Representation::kQP: return axis == 0 ? "q" : "p";
    case Representation::kQLambdaP: return axis == 0 ? "q" : "lambda_p";
    case Representation::kQQbar: return axis == 0 ? "Q" : "Qbar";
  }
  return "?";
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void write_snapshot(const KvnState& s, const std::filesystem::path& path) {
  const auto nq = static_cast<std::size_t>(s.grid.nq());
  const auto np = static_cast<std::size_t>(s.grid.np());
  std::vector<unsigned char> bytes(kMagic, kMagic + 8);
  bytes.reserve(kHeaderBytes + 16 * nq * np);
  put_u32(bytes, static_cast<std::uint32_t>(s.rep));
  put_u32(bytes, static_cast<std::uint32_t>(nq));
  put_u32(bytes, static_cast<std::uint32_t>(np));
  put_u32(bytes, 0);
  for (double v : {s.grid.q_min(), s.grid.q_max(), s.grid.p_min(), s.grid.p_max(), s.hbar}) put_f64(bytes, v);
  for (std::size_t i = 0; i < nq; ++i)
    for (std::size_t j = 0; j < np; ++j) {
      put_f64(bytes, s.amp(i, j).real());
      put_f64(bytes, s.amp(i, j).imag());
    }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

KvnState read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (bytes.size() < kHeaderBytes || std::memcmp(bytes.data(), kMagic, 8) != 0)
    throw IoError(path.string() + ": not a KVNSNAP1 snapshot");
  const std::uint32_t tag = get_u32(&bytes[8]);
  const std::uint32_t nq = get_u32(&bytes[12]);
  const std::uint32_t np = get_u32(&bytes[16]);
  if (tag > 2) throw IoError(path.string() + ": unknown representation tag " + std::to_string(tag));
  if (bytes.size() != kHeaderBytes + 16ull * nq * np)
    throw IoError(path.string() + ": payload size does not match nq x np");
  PhaseSpaceGrid grid(static_cast<int>(nq), static_cast<int>(np), get_f64(&bytes[24]), get_f64(&bytes[32]),
                      get_f64(&bytes[40]), get_f64(&bytes[48]));
  const double hbar = get_f64(&bytes[56]);
  Eigen::MatrixXcd amp(nq, np);
  const unsigned char* p = bytes.data() + kHeaderBytes;
  for (std::uint32_t i = 0; i < nq; ++i)
    for (std::uint32_t j = 0; j < np; ++j, p += 16) amp(i, j) = {get_f64(p), get_f64(p + 8)};
  return KvnState(static_cast<Representation>(tag), std::move(amp), grid, hbar);
}

void write_marginals(const KvnState& s, const std::filesystem::path& prefix) {
  const PhaseSpaceGrid& g = s.grid;
  const Eigen::MatrixXd density = s.amp.cwiseAbs2();
  // Both axes of every representation are spaced by the grid's dq, dp or dlambda_p.
  const double d0 = g.dq();
  const double d1 = s.rep == Representation::kQP ? g.dp() : s.rep == Representation::kQLambdaP ? g.dlambda_p() : g.dq();
  auto coord = [&](int axis, int k) {
    if (axis == 0) return g.q(k);
    switch (s.rep) {
      case Representation::kQP: return g.p(k);
      case Representation::kQLambdaP: return g.lambda_p(k);
      case Representation::kQQbar: return g.q(k);
    }
    return 0.0;
  };
  for (int axis = 0; axis < 2; ++axis) {
    const std::string name = axis_name(s.rep, axis);
    const std::filesystem::path file = prefix.string() + "_" + name + ".csv";
    std::ofstream out(file);
    if (!out) throw IoError("cannot open " + file.string() + " for writing");
    out << name << ",density\n";
    const Eigen::VectorXd marginal =
        axis == 0 ? Eigen::VectorXd(density.rowwise().sum() * d1) : Eigen::VectorXd(density.colwise().sum().transpose() * d0);
    for (Eigen::Index k = 0; k < marginal.size(); ++k)
      out << fmt(coord(axis, static_cast<int>(k))) << "," << fmt(marginal(k)) << "\n";
  }
}

}  // namespace kvn::phase_space
