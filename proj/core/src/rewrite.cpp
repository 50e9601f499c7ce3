#include "cpg/rewrite.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cpg {

using nlohmann::json;

bool RelativePresentation::in_excluded_set() const {
  return std::any_of(kExcludedM.begin(), kExcludedM.end(), [this](long e) { return m == e; });
}

Word RelativePresentation::relator(const std::string& id) const {
  if (id == "R") return parse_word("x^2 t^(m-3) x t^m");
  if (id == "T") return Word({tpow(torsion_exponent)});
  throw std::invalid_argument("unknown relator id '" + id + "'");
}

Word element_A() { return parse_word("x t^-3"); }
Word element_B() { return parse_word("t^m x t^(m+3) x t^(m-3)"); }

Word concrete(const Word& w, const Torsion& torsion) { return free_reduce(w.with_torsion(torsion)); }

Word element_A(const Integer& m) { return concrete(element_A(), torsion_for(m)); }
Word element_B(const Integer& m) { return concrete(element_B(), torsion_for(m)); }

namespace {

Word conjugate_piece(const RelativePresentation& p, const InsertConjugate& move) {
  Word r = p.relator(move.relator);
  if (move.inverted) r = r.inverse();
  return move.conjugator * r * move.conjugator.inverse();
}

}  // namespace

ScriptResult verify_script(const RelativePresentation& p, const Word& lhs, const Word& rhs, const MoveScript& script) {
  ScriptResult result;
  const Torsion torsion = p.torsion();
  Word current = lhs;
  result.trace.push_back(to_string(current));

  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    const ScriptStep& step = script.steps[i];
    if (const auto* insert = std::get_if<InsertConjugate>(&step.move)) {
      if (insert->position > current.size()) {
        throw ScriptError("insert position " + std::to_string(insert->position) + " exceeds word length " +
                              std::to_string(current.size()),
                          i);
      }
      if (insert->relator != "R" && insert->relator != "T") {
        throw ScriptError("unknown relator id '" + insert->relator + "'", i);
      }
      current = current.inserted(insert->position, conjugate_piece(p, *insert));
    } else if (std::holds_alternative<FreeReduceMove>(step.move)) {
      current = free_reduce(current);
    } else {
      const auto& permute = std::get<CyclicPermute>(step.move);
      if (!rhs.empty()) throw ScriptError("cyclic permutation requires the identity as target", i);
      if (!current.empty()) {
        long long size = static_cast<long long>(current.size());
        current = current.rotated(static_cast<std::size_t>(((permute.offset % size) + size) % size));
      }
    }
    result.trace.push_back(to_string(current));

    if (step.expect && concrete(current, torsion) != concrete(*step.expect, torsion)) {
      result.failed_step = i;
      result.message = "checkpoint mismatch: have " + to_string(concrete(current, torsion)) + ", expected " +
                       to_string(concrete(*step.expect, torsion));
      return result;
    }
  }

  Word final_word = concrete(current, torsion);
  Word target = concrete(rhs, torsion);
  result.ok = final_word == target;
  if (!result.ok) {
    result.message = "final word " + to_string(final_word) + " differs from " + to_string(target);
  }
  return result;
}

namespace {

Move parse_move(const json& step, std::size_t index) {
  const std::string op = step.at("op").get<std::string>();
  if (op == "insert") {
    InsertConjugate move;
    long long position = step.at("position").get<long long>();
    if (position < 0) throw ScriptError("negative insert position", index);
    move.position = static_cast<std::size_t>(position);
    move.relator = step.value("relator", std::string("R"));
    move.conjugator = parse_word(step.value("conjugator", std::string()));
    move.inverted = step.value("inverted", false);
    return move;
  }
  if (op == "reduce") return FreeReduceMove{};
  if (op == "rotate") return CyclicPermute{step.at("offset").get<long long>()};
  throw ScriptError("unknown op '" + op + "'", index);
}

}  // namespace

IdentityScript parse_identity_script(const std::string& json_text) {
  json doc = json::parse(json_text);
  IdentityScript script;
  script.id = doc.at("id").get<std::string>();
  script.label = doc.value("label", script.id);
  script.lhs = parse_word(doc.at("lhs").get<std::string>());
  script.rhs = parse_word(doc.at("rhs").get<std::string>());
  const json& steps = doc.at("steps");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    ScriptStep step{parse_move(steps[i], i), std::nullopt, steps[i].value("note", std::string())};
    if (steps[i].contains("expect")) step.expect = parse_word(steps[i].at("expect").get<std::string>());
    script.script.steps.push_back(std::move(step));
  }
  return script;
}

IdentityScript load_identity_script(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open script " + file.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_identity_script(buffer.str());
}

std::string to_json(const IdentityScript& script) {
  json doc;
  doc["id"] = script.id;
  doc["label"] = script.label;
  doc["lhs"] = to_string(script.lhs);
  doc["rhs"] = to_string(script.rhs);
  json steps = json::array();
  for (const ScriptStep& step : script.script.steps) {
    json s;
    if (const auto* insert = std::get_if<InsertConjugate>(&step.move)) {
      s["op"] = "insert";
      s["position"] = insert->position;
      s["relator"] = insert->relator;
      s["conjugator"] = to_string(insert->conjugator);
      s["inverted"] = insert->inverted;
    } else if (std::holds_alternative<FreeReduceMove>(step.move)) {
      s["op"] = "reduce";
    } else {
      s["op"] = "rotate";
      s["offset"] = std::get<CyclicPermute>(step.move).offset;
    }
    if (step.expect) s["expect"] = to_string(*step.expect);
    if (!step.note.empty()) s["note"] = step.note;
    steps.push_back(std::move(s));
  }
  doc["steps"] = std::move(steps);
  return doc.dump(2);
}

std::vector<ConsequenceOutcome> verify_consequences(const RelativePresentation& p,
                                                    const std::filesystem::path& script_dir) {
  std::vector<ConsequenceOutcome> outcomes;
  for (const char* id : {"eq2", "eq3", "eq4", "eq5"}) {
    IdentityScript script = load_identity_script(script_dir / (std::string(id) + ".json"));
    outcomes.push_back({script.id, script.label, verify_script(p, script.lhs, script.rhs, script.script)});
  }
  return outcomes;
}

CornerWord boundary_word(long long alpha, long long beta) {
  if (alpha == 0 && beta == 0) throw std::invalid_argument("boundary word needs (alpha, beta) != (0, 0)");
  if (beta < 0) throw std::invalid_argument("beta must be non-negative; invert the word to flip the sign of beta");
  const Word xc = parse_word("x c");
  const Word xdxe = parse_word("x d x e");
  if (beta == 0) return {xc.power(alpha), false};
  if (alpha == 0) return {xdxe.power(beta), false};
  if (alpha > 0) {
    return {xc.power(alpha - 1) * parse_word("x f") * xdxe.power(beta - 1) * parse_word("x d x f"), false};
  }
  return {parse_word("x^-1") * parse_word("c^-1 x^-1").power(-alpha - 1) * parse_word("g") * xdxe.power(beta - 1) *
              parse_word("x d x h"),
          true};
}

bool boundary_matches(long long alpha, long long beta, const Integer& m) {
  const Torsion torsion = torsion_for(m);
  Word expanded = cyclically_reduce(substitute_corners(boundary_word(alpha, beta).word).with_torsion(torsion));
  Word product = cyclically_reduce((element_A().power(alpha) * element_B().power(beta)).with_torsion(torsion));
  return is_cyclic_rotation(expanded, product);
}

bool tietze_e24_check(long long shift) {
  const Torsion torsion{12, 24};
  Word relator = parse_word("z t^9 z t^18 z t^21");
  Word image = Word({gen('x'), tpow(-shift)});
  Word reduced = concrete(substitute(relator, 'z', image), torsion);
  return reduced == concrete(parse_word("x^2 t^9 x t^12"), torsion);
}

namespace {

std::vector<Letter> conjugator_alphabet() {
  std::vector<Letter> alphabet = {gen('x'), gen('x', -1)};
  for (const TExp& e : {TExp(0, 3), TExp(1, 0), TExp(1, -3), TExp(1, 3)}) {
    alphabet.push_back(tpow(e));
    alphabet.push_back(tpow(-e));
  }
  return alphabet;
}

void extend_conjugators(std::vector<Word>& layer, const std::vector<Letter>& alphabet) {
  std::vector<Word> next;
  for (const Word& w : layer) {
    for (const Letter& letter : alphabet) {
      if (!w.empty()) {
        const Letter& last = w[w.size() - 1];
        if (cancels(last, letter)) continue;
        if (std::holds_alternative<TPower>(last) && std::holds_alternative<TPower>(letter)) continue;
      }
      next.push_back(w * Word({letter}));
    }
  }
  layer = std::move(next);
}

}  // namespace

std::optional<InsertConjugate> discover_step(const Word& current, const Word& target, const DiscoveryOptions& options) {
  std::vector<Torsion> samples;
  std::vector<Word> targets;
  for (const Integer& m : options.sample_m) {
    samples.push_back(torsion_for(m));
    targets.push_back(concrete(target, samples.back()));
  }
  const std::vector<Letter> alphabet = conjugator_alphabet();
  std::vector<Word> layer = {Word()};
  for (std::size_t length = 0; length <= options.max_conjugator_length; ++length) {
    for (const Word& conjugator : layer) {
      for (std::size_t position = 0; position <= current.size(); ++position) {
        for (const char* relator : {"R", "T"}) {
          for (bool inverted : {false, true}) {
            InsertConjugate move{position, relator, conjugator, inverted};
            bool all = true;
            for (std::size_t s = 0; s < samples.size() && all; ++s) {
              RelativePresentation p = RelativePresentation::standard(samples[s].m);
              Word candidate = current.inserted(position, conjugate_piece(p, move));
              all = concrete(candidate, samples[s]) == targets[s];
            }
            if (all) return move;
          }
        }
      }
    }
    extend_conjugators(layer, alphabet);
  }
  return std::nullopt;
}

}  // namespace cpg
