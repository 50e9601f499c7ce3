#pragma once

#include "cpg/word.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace cpg {

// <x, t | t^{torsion}, x^2 t^{m-3} x t^m> over the cyclic group generated by t.
struct RelativePresentation {
  Integer m;
  TExp torsion_exponent{2, 0};

  static RelativePresentation standard(const Integer& m) { return {m, TExp(2, 0)}; }
  // Negative control: t^{2m+1} in place of t^{2m}.
  static RelativePresentation tampered(const Integer& m) { return {m, TExp(2, 1)}; }

  Torsion torsion() const { return Torsion{m, torsion_exponent.at(m)}; }
  bool in_excluded_set() const;

  // "R" is the main relator, "T" the torsion relator. Both are symbolic in m.
  Word relator(const std::string& id) const;
};

Word element_A();
Word element_B();
Word element_A(const Integer& m);
Word element_B(const Integer& m);

// Reduces modulo the torsion relator at a concrete m.
Word concrete(const Word& w, const Torsion& torsion);

struct InsertConjugate {
  std::size_t position = 0;
  std::string relator = "R";
  Word conjugator;
  bool inverted = false;
};
struct FreeReduceMove {};
struct CyclicPermute {
  long long offset = 0;
};
using Move = std::variant<InsertConjugate, FreeReduceMove, CyclicPermute>;

struct ScriptStep {
  Move move;
  // Optional checkpoint compared after the move, at the concrete m.
  std::optional<Word> expect;
  std::string note;
};

struct MoveScript {
  std::vector<ScriptStep> steps;
};

struct IdentityScript {
  std::string id;
  std::string label;
  Word lhs;
  Word rhs;
  MoveScript script;
};

class ScriptError : public std::runtime_error {
 public:
  ScriptError(const std::string& message, std::size_t step)
      : std::runtime_error("step " + std::to_string(step) + ": " + message), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

struct ScriptResult {
  bool ok = false;
  std::vector<std::string> trace;
  std::optional<std::size_t> failed_step;
  std::string message;
};

// Replays the script symbolically in m, then compares with rhs at the concrete m of p.
// Throws ScriptError for malformed steps.
ScriptResult verify_script(const RelativePresentation& p, const Word& lhs, const Word& rhs, const MoveScript& script);

IdentityScript load_identity_script(const std::filesystem::path& file);
IdentityScript parse_identity_script(const std::string& json_text);
std::string to_json(const IdentityScript& script);

struct ConsequenceOutcome {
  std::string id;
  std::string label;
  ScriptResult result;
};

// Replays the scripts eq2..eq5 found in script_dir.
std::vector<ConsequenceOutcome> verify_consequences(const RelativePresentation& p,
                                                    const std::filesystem::path& script_dir);

struct CornerWord {
  Word word;
  bool uses_g_or_h = false;
};

// The boundary label of a region for A^alpha B^beta, with corner letters.
CornerWord boundary_word(long long alpha, long long beta);

// True when the corner substitution of boundary_word(alpha, beta) is a rotation of A^alpha B^beta.
bool boundary_matches(long long alpha, long long beta, const Integer& m);

// Substitutes z = x t^{-shift} into z t^9 z t^18 z t^21 modulo 24 and compares with x^2 t^9 x t^12.
bool tietze_e24_check(long long shift = 9);

struct DiscoveryOptions {
  std::size_t max_conjugator_length = 2;
  std::vector<Integer> sample_m = {5, 7, 8, 10, 11};
};

// Searches for one relator-conjugate insertion taking `current` to a word equal to `target`
// at every sample m. Authoring aid only.
std::optional<InsertConjugate> discover_step(const Word& current, const Word& target,
                                             const DiscoveryOptions& options = {});

}  // namespace cpg
