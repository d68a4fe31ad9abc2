#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>

namespace zigzag {

/// Shortest decimal form that round-trips to the same double; negative zero
/// normalised so CSV files stay byte-stable across code paths.
inline std::string format_double(double x) {
  if (x == 0.0) return "0";
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

inline std::string format_fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, x == 0.0 ? 0.0 : x);
  return buf;
}

/// Output sink honouring the `-o -` convention (stream to stdout).
class OutputFile {
 public:
  explicit OutputFile(const std::string& path) {
    if (path == "-" || path.empty()) {
      os_ = &std::cout;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw std::runtime_error("cannot open output file: " + path);
    os_ = file_.get();
  }

  std::ostream& stream() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_ = nullptr;
};

}  // namespace zigzag
