#pragma once

// Independent reference implementations used as test oracles. None of these
// call into the library; they recompute answers by brute force from first
// principles so that library results can be checked against them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace reference {

// Sum of a well-formed arith program, or nullopt. Validated with a regex and
// evaluated with 64-bit arithmetic, so only for short inputs.
std::optional<std::uint64_t> arith_value(const std::string& program);

// den(e | <l, r>) for arith: defined iff e and l + e + r are well formed and
// e occupies whole terms (l ends in '+' or is empty, r starts with '+' or is
// empty).
std::optional<std::uint64_t> arith_denote(const std::string& e,
                                          const std::string& l,
                                          const std::string& r);

// Every string over the alphabet of length <= n, shortest first and, within a
// length, ordered by symbol rank. Built by repeated extension of the previous
// layer rather than by counting.
std::vector<std::string> shortlex(const std::string& alphabet, std::size_t n);

// Position of s in shortlex order, found by linear search over the full
// enumeration. Only for short strings.
std::optional<std::size_t> shortlex_position(const std::string& alphabet,
                                             const std::string& s);

// ceil(log2(x)) for x >= 1 by repeated doubling.
std::uint64_t ceil_log2(std::uint64_t x);

// Modal folds over explicit cell lists; 2 encodes NULL.
int box_fold(const std::vector<int>& cells);
int diamond_fold(const std::vector<int>& cells);

}  // namespace reference
