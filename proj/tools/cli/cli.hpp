#pragma once

#include "report.hpp"

#include "cpg/abelian.hpp"
#include "cpg/classify.hpp"
#include "cpg/coset.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpg::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Result {
  Report report;
  std::vector<std::string> text;
};

Json integer_json(const Integer& v);
Json to_json(const AbelianInvariants& inv);
Json to_json(const ClassificationRecord& rec);

Result classify_command(long n, long k, long l);
Result scan_command(long n_max, std::optional<long> relabel_n_max);
Result abelianize_command(long n, long k, long l);
// part empty: all four parts.
Result labels_command(const std::string& part, const std::filesystem::path& data);
Result labels_custom_command(const std::filesystem::path& query_file, const std::filesystem::path& data);
Result curvature_command(const std::vector<std::string>& degrees, std::optional<long> triangles);
Result ledger_command(const std::filesystem::path& file);
Result identities_command(const std::filesystem::path& data, long m_max, bool tampered_torsion);
Result coset_command(const FinitePresentation& p, std::size_t max_cosets, Strategy strategy,
                     std::optional<AbelianInvariants> abelian);
Result corollary_c_command(long n);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cpg::cli
