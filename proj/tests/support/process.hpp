#pragma once

// Shells out to the built CLI binary and captures streams and exit code.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace testproc {

struct run_result {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline run_result run(const std::string& binary, const std::string& args) {
    static int counter = 0;
    auto dir = std::filesystem::temp_directory_path();
    auto out_path = dir / ("nashgate_test_out_" + std::to_string(counter) + ".txt");
    auto err_path = dir / ("nashgate_test_err_" + std::to_string(counter) + ".txt");
    ++counter;
    std::string cmd = binary + " " + args + " > " + out_path.string() + " 2> " +
                      err_path.string();
    int status = std::system(cmd.c_str());
    run_result r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::filesystem::remove(out_path);
    std::filesystem::remove(err_path);
    return r;
}

inline std::filesystem::path write_temp_file(const std::string& stem,
                                             const std::string& contents) {
    auto path = std::filesystem::temp_directory_path() / stem;
    std::ofstream f(path);
    f << contents;
    return path;
}

}  // namespace testproc
