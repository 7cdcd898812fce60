#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include "tdga/io.hpp"

namespace tdga::fixture {

inline std::string path(const std::string& name) { return std::string(TDGA_FIXTURE_DIR) + "/" + name; }

inline WorkedExample load(const std::string& name) {
  std::ifstream is(path(name));
  if (!is) throw std::runtime_error("missing fixture " + name);
  return read_worked_example(is);
}

}  // namespace tdga::fixture
