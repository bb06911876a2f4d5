#include "symdyn/serialization.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace symdyn {
namespace {

uint64_t fnv1a64(const std::string& bytes) {
  uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string hex64(uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) {
    throw std::runtime_error(std::string(what) + " must be a JSON array of symbol strings");
  }
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) {
      throw std::runtime_error(std::string(what) + " must contain only strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<Word> sorted_words(const WordSet& words) {
  std::vector<Word> out(words.begin(), words.end());
  std::sort(out.begin(), out.end(), symbol_lex_less);
  return out;
}

}  // namespace

Json alphabet_to_json(const Alphabet& alphabet) { return Json(alphabet.symbols()); }

AlphabetPtr alphabet_from_json(const Json& j) { return make_alphabet(string_list(j, "alphabet")); }

Json word_to_json(const Word& w) { return Json(w.symbols()); }

Word word_from_json(const AlphabetPtr& alphabet, const Json& j) {
  return Word::from_symbols(alphabet, string_list(j, "word"));
}

Json morphism_to_json(const Morphism& m) {
  Json images = Json::object();
  for (int a = 0; a < m.source()->size(); ++a) {
    images[m.source()->symbol(a)] = word_to_json(m.image(a));
  }
  Json j = Json::object();
  j["source"] = alphabet_to_json(*m.source());
  j["target"] = alphabet_to_json(*m.target());
  j["images"] = images;
  return j;
}

Morphism morphism_from_json(const Json& j) {
  const Json& images = j.contains("images") ? j.at("images") : j;
  if (!images.is_object() || images.empty()) {
    throw std::runtime_error("morphism images must be a non-empty JSON object");
  }
  std::vector<std::string> source_names;
  if (j.contains("source")) {
    source_names = string_list(j.at("source"), "source");
  } else {
    for (const auto& [key, value] : images.items()) {
      source_names.push_back(key);
    }
  }
  AlphabetPtr source = make_alphabet(source_names);

  AlphabetPtr target;
  if (j.contains("target")) {
    target = make_alphabet(string_list(j.at("target"), "target"));
  } else {
    // Infer: an endomorphism if every image symbol is a source symbol,
    // otherwise the symbols in order of first appearance.
    std::vector<std::string> seen;
    bool endo = true;
    for (const auto& name : source_names) {
      for (const auto& sym : string_list(images.at(name), "image")) {
        if (std::find(seen.begin(), seen.end(), sym) == seen.end()) {
          seen.push_back(sym);
        }
        if (!source->index_of(sym)) {
          endo = false;
        }
      }
    }
    target = endo ? source : make_alphabet(seen);
  }

  std::vector<Word> image_words;
  for (const auto& name : source_names) {
    if (!images.contains(name)) {
      throw std::runtime_error("morphism is missing an image for symbol " + name);
    }
    image_words.push_back(Word::from_symbols(target, string_list(images.at(name), "image")));
  }
  return Morphism(std::move(source), std::move(target), std::move(image_words));
}

Json subshift_to_json(const Subshift& shift) {
  Json j = Json::object();
  switch (shift.kind()) {
    case Subshift::Kind::FullShift:
      j["type"] = "full";
      j["alphabet"] = alphabet_to_json(*shift.alphabet());
      break;
    case Subshift::Kind::Sft: {
      j["type"] = "sft";
      j["alphabet"] = alphabet_to_json(*shift.alphabet());
      Json forbidden = Json::array();
      for (const Word& f : shift.forbidden()) {
        forbidden.push_back(word_to_json(f));
      }
      j["forbidden"] = forbidden;
      break;
    }
    case Subshift::Kind::Substitution: {
      j["type"] = "substitution";
      j["alphabet"] = alphabet_to_json(*shift.alphabet());
      Json images = Json::object();
      const Morphism& endo = shift.endomorphism();
      for (int a = 0; a < endo.source()->size(); ++a) {
        images[endo.source()->symbol(a)] = word_to_json(endo.image(a));
      }
      j["images"] = images;
      break;
    }
    case Subshift::Kind::Image:
      j["type"] = "image";
      j["inner"] = subshift_to_json(*shift.inner());
      j["morphism"] = morphism_to_json(shift.morphism());
      break;
    case Subshift::Kind::Double:
      j["type"] = "double";
      j["inner"] = subshift_to_json(*shift.inner());
      break;
  }
  return j;
}

SubshiftPtr subshift_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type")) {
    throw std::runtime_error("presentation needs a \"type\" field");
  }
  const std::string type = j.at("type").get<std::string>();
  if (type == "full") {
    return Subshift::full_shift(alphabet_from_json(j.at("alphabet")));
  }
  if (type == "sft") {
    AlphabetPtr alphabet = alphabet_from_json(j.at("alphabet"));
    std::vector<Word> forbidden;
    for (const auto& f : j.at("forbidden")) {
      forbidden.push_back(word_from_json(alphabet, f));
    }
    return Subshift::sft(std::move(alphabet), std::move(forbidden));
  }
  if (type == "substitution") {
    Json m = Json::object();
    if (j.contains("alphabet")) {
      m["source"] = j.at("alphabet");
      m["target"] = j.at("alphabet");
    }
    m["images"] = j.at("images");
    return Subshift::substitution(morphism_from_json(m));
  }
  if (type == "image") {
    SubshiftPtr inner = subshift_from_json(j.at("inner"));
    Morphism sigma = morphism_from_json(j.at("morphism"));
    return Subshift::image(std::move(inner), std::move(sigma));
  }
  if (type == "double") {
    return Subshift::doubled(subshift_from_json(j.at("inner")));
  }
  throw std::runtime_error("unknown presentation type: " + type);
}

SubshiftPtr load_subshift(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  Json j = Json::parse(in);
  return subshift_from_json(j);
}

Json hom_to_json(const FreeGroupHom& phi) {
  Json j = Json::object();
  j["source"] = alphabet_to_json(*phi.source().positive());
  j["target"] = alphabet_to_json(*phi.target().positive());
  Json images = Json::object();
  for (int a = 0; a < phi.source().positive_count(); ++a) {
    images[phi.source().positive()->symbol(a)] = word_to_json(phi.positive_image(a));
  }
  j["images"] = images;
  return j;
}

FreeGroupHom hom_from_json(const Json& j) {
  const Json& images = j.contains("images") ? j.at("images") : j;
  if (!images.is_object() || images.empty()) {
    throw std::runtime_error("hom images must be a non-empty JSON object");
  }
  std::vector<std::string> source_names;
  if (j.contains("source")) {
    source_names = string_list(j.at("source"), "source");
  } else {
    for (const auto& [key, value] : images.items()) {
      source_names.push_back(key);
    }
  }
  DoubledAlphabet source(make_alphabet(source_names));
  DoubledAlphabet target = j.contains("target")
                               ? DoubledAlphabet(make_alphabet(string_list(j.at("target"), "target")))
                               : source;
  std::vector<Word> image_words;
  for (const auto& name : source_names) {
    if (!images.contains(name)) {
      throw std::runtime_error("hom is missing an image for symbol " + name);
    }
    image_words.push_back(Word::from_symbols(target.full(), string_list(images.at(name), "image")));
  }
  return FreeGroupHom(std::move(source), std::move(target), std::move(image_words));
}

FreeGroupHom load_hom(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  Json j = Json::parse(in);
  return hom_from_json(j);
}

namespace {

Json witness_to_json(const Witness& witness) {
  Json j = Json::object();
  if (const auto* rep = std::get_if<RepetitionWitness>(&witness)) {
    j["kind"] = "repetition";
    j["w1"] = word_to_json(rep->w1);
    j["w2"] = word_to_json(rep->w2);
    j["position"] = rep->position;
  } else if (const auto* pp = std::get_if<PeriodicPowerWitness>(&witness)) {
    j["kind"] = "periodic_power";
    j["v"] = word_to_json(pp->v);
    j["root"] = word_to_json(pp->root);
    j["exponent"] = pp->exponent;
  } else {
    const auto& orb = std::get<OrbitCollisionWitness>(witness);
    j["kind"] = "orbit_collision";
    j["v1"] = word_to_json(orb.v1);
    j["v2"] = word_to_json(orb.v2);
  }
  return j;
}

}  // namespace

Json certificate_to_json(const RecognizabilityCertificate& cert) {
  Json j = Json::object();
  switch (cert.verdict) {
    case RecognizabilityCertificate::Verdict::CertifiedUpTo:
      j["verdict"] = "certified_up_to";
      if (cert.r >= 0) {
        j["r"] = cert.r;
      }
      j["window"] = cert.window;
      break;
    case RecognizabilityCertificate::Verdict::CounterexampleFound:
      j["verdict"] = "counterexample_found";
      j["witness"] = witness_to_json(*cert.witness);
      break;
    case RecognizabilityCertificate::Verdict::Inconclusive:
      j["verdict"] = "inconclusive";
      j["r_max"] = cert.r_max;
      j["window"] = cert.window;
      break;
  }
  if (cert.period_max > 0) {
    j["period_max"] = cert.period_max;
  }
  return j;
}

Json word_set_to_json(const WordSet& words) {
  Json out = Json::array();
  for (const Word& w : sorted_words(words)) {
    out.push_back(word_to_json(w));
  }
  return out;
}

std::string table_to_csv(const ComplexityTable& table) {
  std::ostringstream out;
  out << "n,p\n";
  for (const auto& [n, p] : table.entries) {
    out << n << ',' << p.str() << '\n';
  }
  return out.str();
}

std::string table_hash(const ComplexityTable& table) { return hex64(fnv1a64(table_to_csv(table))); }

std::string profile_to_csv(const EntropyProfile& profile) {
  std::ostringstream out;
  out << "n,p,log_p_over_n\n";
  for (const auto& e : profile.entries) {
    out << e.n << ',' << e.p.str() << ',' << format_double(e.log_p_over_n) << '\n';
  }
  return out.str();
}

Json bound_report_to_json(const BoundReport& report) {
  Json j = Json::object();
  j["claim"] = report.claim;
  Json constants = Json::object();
  for (const auto& [name, value] : report.constants) {
    constants[name] = value;
  }
  j["constants"] = constants;
  j["window"] = report.window;
  j["pass"] = report.pass;
  if (!report.skipped.empty()) {
    j["skipped"] = report.skipped;
  }
  Json failures = Json::array();
  for (const BoundFailure& f : report.failures) {
    Json fj = Json::object();
    fj["n"] = f.n;
    fj["inequality"] = f.inequality;
    fj["lhs"] = nat_to_string(f.lhs);
    fj["rhs"] = nat_to_string(f.rhs);
    failures.push_back(fj);
  }
  j["failures"] = failures;
  Json tables = Json::object();
  for (const auto& [name, hash] : report.table_hashes) {
    tables[name] = hash;
  }
  j["tables"] = tables;
  return j;
}

std::string bound_report_to_text(const BoundReport& report) {
  std::ostringstream out;
  out << (report.pass ? "PASS" : "FAIL") << "  " << report.claim << "  (window "
      << report.window << ")\n";
  for (const auto& [name, value] : report.constants) {
    out << "      " << name << " = " << value << '\n';
  }
  if (!report.skipped.empty()) {
    out << "      below-threshold n skipped:";
    for (int n : report.skipped) {
      out << ' ' << n;
    }
    out << '\n';
  }
  for (const BoundFailure& f : report.failures) {
    out << "      FAIL at n=" << f.n << ": " << f.inequality << "  (lhs " << nat_to_string(f.lhs)
        << ", rhs " << nat_to_string(f.rhs) << ")\n";
  }
  return out.str();
}

Json theta_report_to_json(const ThetaReport& report) {
  Json j = Json::object();
  j["window"] = report.window;
  j["min_ratio"] = {{"p_A", nat_to_string(report.min_ratio.first)},
                    {"p_B", nat_to_string(report.min_ratio.second)},
                    {"at_n", report.min_at}};
  j["max_ratio"] = {{"p_A", nat_to_string(report.max_ratio.first)},
                    {"p_B", nat_to_string(report.max_ratio.second)},
                    {"at_n", report.max_at}};
  j["ratio_strictly_increasing"] = report.ratio_strictly_increasing;
  j["theta_violation_evidence"] = report.flagged;
  j["tables"] = {{"p_A", report.table_a_hash}, {"p_B", report.table_b_hash}};
  return j;
}

Json basis_change_report_to_json(const BasisChangeReport& report) {
  Json j = Json::object();
  j["claim"] = "proposition-5.2(1)";
  j["pass"] = report.pass;
  j["window"] = report.window;
  j["constants"] = {{"C", nat_to_string(report.upper_c)},
                    {"D", report.upper_d},
                    {"C_reverse", nat_to_string(report.lower_c)},
                    {"D_reverse", report.lower_d}};
  if (!report.skipped.empty()) {
    j["skipped"] = report.skipped;
  }
  Json failures = Json::array();
  for (const BasisChangeFailure& f : report.failures) {
    Json fj = Json::object();
    fj["n"] = f.n;
    fj["inequality"] = f.inequality;
    fj["lhs"] = nat_to_string(f.lhs);
    fj["rhs"] = nat_to_string(f.rhs);
    failures.push_back(fj);
  }
  j["failures"] = failures;
  j["tables"] = {{"p_X_pm", report.table_x_hash}, {"p_Y_pm", report.table_y_hash}};
  return j;
}

Json bundle_to_json(const CounterexampleBundle& bundle) {
  Json j = Json::object();
  j["pass"] = bundle.pass;
  Json reports = Json::array();
  for (const BoundReport& r : bundle.reports) {
    reports.push_back(bound_report_to_json(r));
  }
  j["reports"] = reports;
  Json ratios = Json::array();
  for (size_t i = 0; i < bundle.ratios.size(); ++i) {
    Json rj = Json::object();
    rj["n"] = static_cast<int>(i + 1);
    rj["p_X_2n"] = nat_to_string(bundle.ratios[i].first);
    rj["p_Y_2n"] = nat_to_string(bundle.ratios[i].second);
    ratios.push_back(rj);
  }
  j["ratios"] = ratios;
  j["entropy_x"] = {{"window", bundle.profile_x.window()},
                    {"headline", format_double(bundle.profile_x.headline())}};
  j["entropy_y"] = {{"window", bundle.profile_y.window()},
                    {"headline", format_double(bundle.profile_y.headline())}};
  return j;
}

std::string nat_to_string(const Nat& value) { return value.str(); }

std::string format_double(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) {
    return "nan";
  }
  return std::string(buffer, ptr);
}

}  // namespace symdyn
