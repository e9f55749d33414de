#pragma once

// Command-line front end shared by the sgb executable and the tests.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace sgb {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses "2,3,5", "3..13" or mixtures of both. With primes_only, ranges keep only
/// primes and listed values must be prime. Throws DomainError on malformed input.
std::vector<std::uint64_t> parse_value_list(std::string_view text, bool primes_only);

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgb
