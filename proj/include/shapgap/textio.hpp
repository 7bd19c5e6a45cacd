#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "shapgap/errors.hpp"

namespace shapgap {

// Round-trippable decimal form, 17 significant digits. Record files and
// tables use this everywhere so reruns are byte-comparable.
inline std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Short form for plot coordinates.
inline std::string fmt_g6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RuntimeError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw RuntimeError("cannot write file: " + path);
  out << content;
  if (!out) throw RuntimeError("write failed: " + path);
}

}  // namespace shapgap
