#pragma once
#include <string>

#include <signcert/vector.hpp>

inline std::string data_path(const std::string& name) {
  return std::string(SIGNCERT_DATA_DIR) + "/" + name;
}

inline signcert::RowVector vec9(const std::string& text) {
  return signcert::parse_vector(text, 9);
}
