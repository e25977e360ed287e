#pragma once

// Runs friezectl and captures stdout, stderr and the exit status.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace cli {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string data(const std::string& name) { return std::string(FRIEZES_DATA_DIR) + "/" + name; }
inline std::string golden(const std::string& name) {
  return std::string(FRIEZES_GOLDEN_DIR) + "/" + name;
}

inline std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / ("friezes_tests_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

inline Result run(const std::string& args, const std::string& env = "") {
  const auto dir = scratch_dir();
  const std::string out = (dir / "stdout").string();
  const std::string err = (dir / "stderr").string();
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" + FRIEZECTL_PATH + "' " + args +
                          " >'" + out + "' 2>'" + err + "'";
  const int status = std::system(cmd.c_str());
  Result r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

}  // namespace cli
