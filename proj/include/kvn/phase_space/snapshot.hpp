#pragma once

#include <filesystem>

#include "kvn/phase_space/state.hpp"

namespace kvn::phase_space {

// Binary layout in docs/snapshot_format.md: 64-byte little-endian header,
// then nq*np complex doubles in row-major order.
void write_snapshot(const KvnState& s, const std::filesystem::path& path);
KvnState read_snapshot(const std::filesystem::path& path);

// <prefix>_<axis>.csv for both axes, columns "<axis>,density".
void write_marginals(const KvnState& s, const std::filesystem::path& prefix);

}  // namespace kvn::phase_space
