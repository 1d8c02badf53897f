#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace homeo::cli {

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kUsageError = 2 };

struct CliConfig {
    std::uint64_t seed = 0;
    std::size_t samples = 10000;
    std::filesystem::path out_dir;  ///< empty: print only, write no files
    std::set<std::string> formats{"json", "csv"};
    bool timing = false;
};

/// Parses "x", "x,y", "yi", "x+yi" and "x-yi".
std::complex<double> parse_complex(const std::string& text);

/// Entry point shared by the executable and the tests. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homeo::cli
