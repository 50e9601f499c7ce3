#include "cpg/data_dir.hpp"

#include <cstdlib>

#ifndef CPG_DEFAULT_DATA_DIR
#define CPG_DEFAULT_DATA_DIR "data"
#endif

namespace cpg {

std::filesystem::path default_data_dir() { return CPG_DEFAULT_DATA_DIR; }

std::filesystem::path data_dir() {
  const char* env = std::getenv("DATA_DIR");
  if (env != nullptr && *env != '\0') return env;
  return default_data_dir();
}

}  // namespace cpg
