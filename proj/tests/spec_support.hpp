#pragma once

#include <string>

#include "kenmotsu/spec_file.hpp"

namespace kenmotsu::testing {

inline std::string spec_path(const std::string& name) { return std::string(KENMOTSU_SPEC_DIR) + "/" + name; }

inline SpecDocument bundled(const std::string& name = "kenmotsu3d.json") { return load_spec_file(spec_path(name)); }

inline FrameVec e(std::size_t n, std::size_t one_based) { return basis_vector(n, one_based - 1); }

}  // namespace kenmotsu::testing
