#pragma once

#include <filesystem>

namespace cpg {

// $DATA_DIR when set and nonempty, else the directory compiled into the library.
std::filesystem::path data_dir();
std::filesystem::path default_data_dir();

}  // namespace cpg
