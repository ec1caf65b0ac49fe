#pragma once

#include <string>

#include "positroid/io.hpp"

namespace positroid {

// Exit codes: 0 ok, 1 generic failure (also: any verify check failed),
// 2 Le-rule violation, 3 base-time search failure, 4 regularity violation.
int run_cli(int argc, const char* const* argv);

int cmd_matrix(const RunConfig& rc);
int cmd_divisor(const RunConfig& rc);
int cmd_soliton(const RunConfig& rc);
int cmd_verify(const RunConfig* rc, std::uint64_t seed, const std::string& out_dir);
int cmd_example(const std::string& which, const std::string& out_dir, int precision);

// canned data for the two worked examples ("gr24", "gr492")
RunConfig example_config(const std::string& which);

}  // namespace positroid
