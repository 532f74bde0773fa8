#pragma once

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "omega.hpp"
#include "spin_dirac.hpp"

namespace e6 {

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fixture directory: $E6_FIXTURE_DIR, else the source tree's fixtures/.
inline std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("E6_FIXTURE_DIR"); env && *env) return env;
#ifdef E6_DEFAULT_FIXTURE_DIR
  return E6_DEFAULT_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

/// The 170 fully supported KGB elements of E6_h.
inline const std::vector<std::int64_t>& fully_supported_kgb_indices() {
  static const std::vector<std::int64_t> idx = [] {
    const std::vector<std::pair<std::int64_t, std::int64_t>> ranges{
        {266, 266}, {268, 268}, {271, 271}, {275, 276}, {294, 299}, {303, 303}, {306, 306}, {313, 314}, {317, 317},
        {321, 321}, {323, 326}, {328, 328}, {342, 347}, {349, 349}, {351, 351}, {354, 354}, {360, 360}, {362, 362},
        {365, 369}, {372, 373}, {375, 392}, {394, 396}, {398, 398}, {400, 400}, {402, 403}, {405, 413}, {415, 431},
        {433, 434}, {436, 512}};
    std::vector<std::int64_t> out;
    for (auto [lo, hi] : ranges)
      for (auto x = lo; x <= hi; ++x) out.push_back(x);
    return out;
  }();
  return idx;
}

inline bool is_fully_supported_kgb(std::int64_t x) {
  const auto& v = fully_supported_kgb_indices();
  return std::binary_search(v.begin(), v.end(), x);
}

namespace detail {

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw FixtureError("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> out;
  for (auto& line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || trim(line).front() == '#') continue;
    out.push_back(line);
  }
  return out;
}

inline Rational json_rational(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw FixtureError("expected an integer or a \"p/q\" string, got " + j.dump());
}

inline nlohmann::json rational_json(const Rational& r) {
  if (is_integer(r)) return r.numerator();
  return to_string(r);
}

inline KTypeWeight json_ktype(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != kRank) throw FixtureError("expected 6 K-type coordinates, got " + j.dump());
  Coords6 c{};
  for (std::size_t i = 0; i < kRank; ++i) c[i] = json_rational(j[i]);
  return KTypeWeight(c);
}

inline nlohmann::json ktype_json(const KTypeWeight& mu) {
  auto j = nlohmann::json::array();
  for (const auto& x : mu.k) j.push_back(rational_json(x));
  return j;
}

}  // namespace detail

// ---------------------------------------------------------------- involutions

/// JSON array of {kgb_index, support, matrix}; kgb_index may be null when the
/// record is not tied to a label. Throws on the first invalid record.
inline std::vector<InvolutionRecord> parse_involutions(const std::string& text, const RootDatum& d = e6_datum()) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FixtureError(std::string("involution file: ") + e.what());
  }
  if (!j.is_array()) throw FixtureError("involution file: top level must be an array");
  if (j.empty()) throw FixtureError("no involutions");
  std::vector<InvolutionRecord> out;
  for (std::size_t n = 0; n < j.size(); ++n) {
    const auto& rec = j[n];
    const std::string who = "involution record #" + std::to_string(n);
    try {
      InvolutionRecord r;
      r.kgb_index = rec.at("kgb_index").is_null() ? -1 : rec.at("kgb_index").get<std::int64_t>();
      for (const auto& s : rec.at("support")) {
        const int i = s.get<int>();
        if (i < 0 || i >= static_cast<int>(kRank)) throw FixtureError(who + ": support index out of range");
        r.support.insert(i);
      }
      const auto& m = rec.at("matrix");
      if (!m.is_array() || m.size() != kAmbientDim) throw FixtureError(who + ": matrix must be 8x8");
      for (std::size_t i = 0; i < kAmbientDim; ++i) {
        if (!m[i].is_array() || m[i].size() != kAmbientDim) throw FixtureError(who + ": matrix must be 8x8");
        for (std::size_t k = 0; k < kAmbientDim; ++k) r.matrix[i][k] = detail::json_rational(m[i][k]);
      }
      if (r.kgb_index >= 0 && r.fully_supported() && !is_fully_supported_kgb(r.kgb_index))
        throw FixtureError(who + ": kgb_index " + std::to_string(r.kgb_index) + " is not a fully supported KGB element");
      validate_involution(d, r);
      out.push_back(std::move(r));
    } catch (const FixtureError&) {
      throw;
    } catch (const std::exception& e) {
      throw FixtureError(who + ": " + e.what());
    }
  }
  return out;
}

inline std::vector<InvolutionRecord> load_involutions(const std::filesystem::path& p) {
  return parse_involutions(detail::read_file(p));
}

inline std::string serialize_involutions(const std::vector<InvolutionRecord>& recs) {
  auto j = nlohmann::json::array();
  for (const auto& r : recs) {
    nlohmann::json m = nlohmann::json::array();
    for (const auto& row : r.matrix) {
      auto jr = nlohmann::json::array();
      for (const auto& x : row) jr.push_back(detail::rational_json(x));
      m.push_back(jr);
    }
    j.push_back({{"kgb_index", r.kgb_index < 0 ? nlohmann::json(nullptr) : nlohmann::json(r.kgb_index)},
                 {"support", std::vector<int>(r.support.begin(), r.support.end())},
                 {"matrix", m}});
  }
  return j.dump(1) + "\n";
}

/// Record carrying a given KGB label, or nullptr.
inline const InvolutionRecord* find_involution(const std::vector<InvolutionRecord>& recs, std::int64_t x) {
  for (const auto& r : recs)
    if (r.kgb_index == x) return &r;
  return nullptr;
}

// ---------------------------------------------------------------- branches

inline BranchList parse_branch(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    BranchList b;
    b.height_bound = j.at("height_bound").get<std::int64_t>();
    if (j.contains("parameter")) {
      const auto& p = j["parameter"];
      b.source = SourceParameter{p.at("x").get<std::int64_t>(), parse_bracket(p.at("lambda").get<std::string>()),
                                 parse_bracket(p.at("nu").get<std::string>())};
    }
    for (const auto& e : j.at("ktypes")) {
      if (!e.is_array() || e.size() != 2) throw FixtureError("branch entry must be [[a,b,c,d,e,f], mult]: " + e.dump());
      b.ktypes.emplace_back(detail::json_ktype(e[0]), e[1].get<std::int64_t>());
    }
    validate_branch(b);
    return b;
  } catch (const FixtureError&) {
    throw;
  } catch (const std::exception& e) {
    throw FixtureError(std::string("branch file: ") + e.what());
  }
}

inline BranchList load_branch(const std::filesystem::path& p) {
  try {
    return parse_branch(detail::read_file(p));
  } catch (const FixtureError& e) {
    throw FixtureError(p.filename().string() + ": " + e.what());
  }
}

inline std::string serialize_branch(const BranchList& b) {
  nlohmann::json j;
  if (b.source) j["parameter"] = {{"x", b.source->x}, {"lambda", bracket(b.source->lambda)}, {"nu", bracket(b.source->nu)}};
  j["height_bound"] = b.height_bound;
  j["ktypes"] = nlohmann::json::array();
  for (const auto& [mu, m] : b.ktypes) j["ktypes"].push_back({detail::ktype_json(mu), m});
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------- failure case

struct FailureFixture {
  InfChar infchar;
  std::vector<KTypeWeight> lkts;

  friend bool operator==(const FailureFixture&, const FailureFixture&) = default;
};

inline FailureFixture parse_failure(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    FailureFixture f;
    f.infchar = parse_infchar(j.at("infchar").get<std::string>());
    for (const auto& e : j.at("lkts")) {
      KTypeWeight mu = detail::json_ktype(e);
      if (!is_ktype_weight(mu)) throw FixtureError("failure fixture: " + to_string(mu) + " is not a K-type highest weight");
      f.lkts.push_back(mu);
    }
    return f;
  } catch (const FixtureError&) {
    throw;
  } catch (const std::exception& e) {
    throw FixtureError(std::string("failure fixture: ") + e.what());
  }
}

inline FailureFixture load_failure(const std::filesystem::path& p) { return parse_failure(detail::read_file(p)); }

inline std::string serialize_failure(const FailureFixture& f) {
  nlohmann::json j;
  j["infchar"] = to_string(f.infchar);
  j["lkts"] = nlohmann::json::array();
  for (const auto& mu : f.lkts) j["lkts"].push_back(detail::ktype_json(mu));
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------- tables

struct ScatteredRow {
  std::int64_t x = 0;
  Coords6 lambda{}, nu{};
  InfChar infchar;
  std::vector<KTypeWeight> spin_lkts;

  friend bool operator==(const ScatteredRow&, const ScatteredRow&) = default;
};

/// A row of the table of fully supported non-Dirac members with integral
/// infinitesimal character.
struct IntegralRow {
  std::int64_t x = 0;
  Coords6 lambda{}, nu{};
  InfChar infchar;

  friend bool operator==(const IntegralRow&, const IntegralRow&) = default;
};

namespace detail {

inline std::vector<std::vector<std::string>> tsv_records(const std::string& text, std::size_t columns, const std::string& what) {
  auto lines = data_lines(text);
  if (lines.empty()) throw FixtureError(what + ": empty file");
  lines.erase(lines.begin());  // header
  std::vector<std::vector<std::string>> out;
  for (std::size_t n = 0; n < lines.size(); ++n) {
    auto cols = split(lines[n], '\t');
    if (cols.size() != columns)
      throw FixtureError(what + " row " + std::to_string(n + 1) + ": expected " + std::to_string(columns) + " columns, got " +
                         std::to_string(cols.size()));
    out.push_back(std::move(cols));
  }
  return out;
}

}  // namespace detail

inline std::vector<ScatteredRow> parse_scattered(const std::string& text) {
  std::vector<ScatteredRow> out;
  std::size_t n = 0;
  for (const auto& c : detail::tsv_records(text, 5, "scattered table")) {
    ++n;
    try {
      ScatteredRow r;
      r.x = detail::parse_int(c[0]);
      r.lambda = parse_bracket(c[1]);
      r.nu = parse_bracket(c[2]);
      r.infchar = parse_infchar(c[3]);
      for (const auto& s : detail::split(c[4], ';'))
        if (!detail::trim(s).empty()) r.spin_lkts.push_back(parse_ktype(s));
      if (!is_fully_supported_kgb(r.x)) throw FixtureError("x=" + std::to_string(r.x) + " is not fully supported");
      if (r.spin_lkts.empty()) throw FixtureError("no spin LKTs");
      out.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw FixtureError("scattered table row " + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

inline std::vector<IntegralRow> parse_integral(const std::string& text) {
  std::vector<IntegralRow> out;
  std::size_t n = 0;
  for (const auto& c : detail::tsv_records(text, 4, "FS-integral table")) {
    ++n;
    try {
      IntegralRow r{detail::parse_int(c[0]), parse_bracket(c[1]), parse_bracket(c[2]), parse_infchar(c[3])};
      if (!is_fully_supported_kgb(r.x)) throw FixtureError("x=" + std::to_string(r.x) + " is not fully supported");
      out.push_back(r);
    } catch (const std::exception& e) {
      throw FixtureError("FS-integral table row " + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

inline std::vector<ScatteredRow> load_scattered(const std::filesystem::path& p) { return parse_scattered(detail::read_file(p)); }
inline std::vector<IntegralRow> load_integral(const std::filesystem::path& p) { return parse_integral(detail::read_file(p)); }

inline std::string serialize_scattered(const std::vector<ScatteredRow>& rows) {
  std::string out = "x\tlambda\tnu\tinfchar\tspin_lkts\n";
  for (const auto& r : rows) {
    out += std::to_string(r.x) + "\t" + bracket(r.lambda) + "\t" + bracket(r.nu) + "\t" + to_string(r.infchar) + "\t";
    for (std::size_t i = 0; i < r.spin_lkts.size(); ++i) out += (i ? ";" : "") + to_string(r.spin_lkts[i]);
    out += "\n";
  }
  return out;
}

inline std::string serialize_integral(const std::vector<IntegralRow>& rows) {
  std::string out = "x\tlambda\tnu\tinfchar\n";
  for (const auto& r : rows)
    out += std::to_string(r.x) + "\t" + bracket(r.lambda) + "\t" + bracket(r.nu) + "\t" + to_string(r.infchar) + "\n";
  return out;
}

// ---------------------------------------------------------------- tempered rows

using Params = std::array<std::int64_t, kRank>;  // a..f

/// c_a a + ... + c_f f + constant.
struct AffineExpr {
  Params coef{};
  std::int64_t constant = 0;

  std::int64_t operator()(const Params& p) const {
    std::int64_t s = constant;
    for (std::size_t i = 0; i < kRank; ++i) s += coef[i] * p[i];
    return s;
  }
  friend bool operator==(const AffineExpr&, const AffineExpr&) = default;
};

inline std::string to_string(const AffineExpr& e) {
  std::string out;
  for (std::size_t i = 0; i < kRank; ++i) {
    const auto c = e.coef[i];
    if (c == 0) continue;
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (c != 1 && c != -1) out += std::to_string(c < 0 ? -c : c);
    out += static_cast<char>('a' + i);
  }
  if (e.constant != 0 || out.empty()) {
    if (e.constant < 0) out += "-";
    else if (!out.empty()) out += "+";
    out += std::to_string(e.constant < 0 ? -e.constant : e.constant);
  }
  return out;
}

/// "a+2c+e-f+3" and the like; variables a..f, integer coefficients.
inline AffineExpr parse_affine(std::string_view s) {
  AffineExpr e;
  std::size_t i = 0;
  bool any = false;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip();
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (any) {
      throw FixtureError("expected + or - in \"" + std::string(s) + "\"");
    }
    std::int64_t coef = 1;
    bool digits = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coef = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) coef = coef * 10 + (s[i++] - '0');
      digits = true;
    }
    skip();
    if (i < s.size() && s[i] >= 'a' && s[i] <= 'f') {
      e.coef[static_cast<std::size_t>(s[i] - 'a')] += sign * coef;
      ++i;
    } else if (digits) {
      e.constant += sign * coef;
    } else {
      throw FixtureError("bad term in \"" + std::string(s) + "\"");
    }
    any = true;
    skip();
  }
  if (!any) throw FixtureError("empty expression");
  return e;
}

struct Condition {
  enum class Op { ge, eq };
  AffineExpr expr;
  Op op = Op::ge;
  std::int64_t rhs = 0;

  bool holds(const Params& p) const { return op == Op::ge ? expr(p) >= rhs : expr(p) == rhs; }
  friend bool operator==(const Condition&, const Condition&) = default;
};

inline std::string to_string(const Condition& c) {
  return to_string(c.expr) + (c.op == Condition::Op::ge ? ">=" : "=") + std::to_string(c.rhs);
}

inline Condition parse_condition(std::string_view s) {
  Condition c;
  auto pos = s.find(">=");
  std::size_t width = 2;
  if (pos == std::string_view::npos) {
    pos = s.find('=');
    width = 1;
    c.op = Condition::Op::eq;
  }
  if (pos == std::string_view::npos) throw FixtureError("condition without >= or =: \"" + std::string(s) + "\"");
  c.expr = parse_affine(s.substr(0, pos));
  c.rhs = detail::parse_int(s.substr(pos + width));
  return c;
}

/// mu(a..f) is the unique LKT of the tempered module with lambda = Lambda = [a..f],
/// provided one of the alternative conjunctions holds.
struct TemperedRow {
  std::int64_t x = 0;
  std::array<AffineExpr, kRank> mu;
  std::vector<std::vector<Condition>> alternatives;

  bool admits(const Params& p) const {
    for (const auto& alt : alternatives) {
      bool all = true;
      for (const auto& c : alt) all = all && c.holds(p);
      if (all) return true;
    }
    return alternatives.empty();
  }
  KTypeWeight lkt(const Params& p) const {
    Coords6 c{};
    for (std::size_t i = 0; i < kRank; ++i) c[i] = mu[i](p);
    return KTypeWeight(c);
  }
  friend bool operator==(const TemperedRow&, const TemperedRow&) = default;
};

inline TemperedRow parse_tempered_row(std::string_view line) {
  TemperedRow r;
  const auto colon = line.find(':');
  if (colon == std::string_view::npos) throw FixtureError("missing ':'");
  r.x = detail::parse_int(line.substr(0, colon));
  line = line.substr(colon + 1);
  const auto bar = line.find('|');
  const auto exprs = detail::split(line.substr(0, bar), ',');
  if (exprs.size() != kRank) throw FixtureError("expected 6 coordinates, got " + std::to_string(exprs.size()));
  for (std::size_t i = 0; i < kRank; ++i) r.mu[i] = parse_affine(exprs[i]);
  if (bar == std::string_view::npos) return r;
  // Alternatives are separated by the word "or".
  std::string rest(line.substr(bar + 1));
  std::size_t start = 0;
  while (true) {
    auto pos = rest.find(" or ", start);
    std::vector<Condition> alt;
    for (const auto& c : detail::split(std::string_view(rest).substr(start, pos == std::string::npos ? std::string::npos : pos - start), ','))
      alt.push_back(parse_condition(c));
    r.alternatives.push_back(std::move(alt));
    if (pos == std::string::npos) break;
    start = pos + 4;
  }
  return r;
}

inline std::vector<TemperedRow> parse_tempered(const std::string& text) {
  std::vector<TemperedRow> out;
  for (const auto& line : detail::data_lines(text)) {
    try {
      out.push_back(parse_tempered_row(line));
    } catch (const std::exception& e) {
      throw FixtureError("tempered row \"" + line + "\": " + e.what());
    }
  }
  return out;
}

inline std::vector<TemperedRow> load_tempered(const std::filesystem::path& p) { return parse_tempered(detail::read_file(p)); }

inline std::string serialize_tempered(const std::vector<TemperedRow>& rows) {
  std::string out;
  for (const auto& r : rows) {
    out += std::to_string(r.x) + ": ";
    for (std::size_t i = 0; i < kRank; ++i) out += (i ? ", " : "") + to_string(r.mu[i]);
    for (std::size_t k = 0; k < r.alternatives.size(); ++k) {
      out += k ? " or " : " | ";
      for (std::size_t i = 0; i < r.alternatives[k].size(); ++i) out += (i ? ", " : "") + to_string(r.alternatives[k][i]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace e6
