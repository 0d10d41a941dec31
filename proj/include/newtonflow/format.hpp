#ifndef NEWTONFLOW_FORMAT_HPP
#define NEWTONFLOW_FORMAT_HPP

#include <cstdio>
#include <string>

namespace newtonflow {

inline constexpr const char* kSchemaTag = "newtonflow-v1";

// 17 significant digits: round-trips doubles exactly and keeps CLI output
// byte-identical across runs.
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace newtonflow

#endif
