#pragma once

// The three CLI subcommands, writing to caller-supplied streams so they can
// be exercised without spawning a process.

#include <cstdint>
#include <ostream>
#include <string>

#include "fltk/criterion.hpp"

namespace fltk {

namespace exit_code {
inline constexpr int kProven = 0;
inline constexpr int kUsage = 2;
inline constexpr int kOutput = 3;
inline constexpr int kPartial = 10;
inline constexpr int kInconclusive = 20;
}  // namespace exit_code

enum class OutputFormat { Text, Json };

int cmd_check(std::int64_t d, std::uint64_t p, std::uint64_t n_max, OutputFormat format, std::ostream& out,
              std::ostream& err);

int cmd_scan(std::int64_t d, std::uint64_t p_max, std::uint64_t n_max, unsigned jobs, const std::string& path,
             std::ostream& out, std::ostream& err);

int cmd_wn(std::uint64_t n, std::ostream& out, std::ostream& err);

}  // namespace fltk
