// Regenerates the derived fixtures:
//   kgb_involutions.json  fully supported Cartan involutions, labels pinned by the tables
//   failure_0011117.json  "lkts" converted from the atlas highest weights
// Usage: fixturegen [fixture-dir]

#include <e6dirac/fixtures.hpp>

#include <iostream>
#include <map>

using namespace e6;

namespace {

// A theta_x of E6_h on the fundamental Cartan is an involution of W with a
// -1 eigenspace of dimension <= 2 (real rank 2): 1, s_b, or s_b s_c with b, c
// orthogonal. Full support leaves 7 reflections and 128 products. A
// reflection class carries 6 KGB elements, a product class 1, for 170 total.
struct DerivedTheta {
  InvolutionRecord rec;
  std::size_t fiber;
};

std::vector<DerivedTheta> derive_thetas(const RootDatum& d) {
  std::vector<DerivedTheta> out;
  const auto& pos = d.positive_roots;
  for (const auto& b : pos) {
    auto r = make_involution(d, WeylElement::reflection(b));
    if (r.fully_supported()) out.push_back({r, 6});
  }
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j) {
      if (dot(pos[i], pos[j]) != 0) continue;
      auto r = make_involution(d, WeylElement::reflection(pos[i]) * WeylElement::reflection(pos[j]));
      if (r.fully_supported()) out.push_back({r, 1});
    }
  return out;
}

struct LabelRow {
  std::int64_t x;
  Coords6 lambda, nu;
  InfChar infchar;
  std::vector<std::size_t> candidates;
};

// All assignments of rows to candidate thetas within fiber capacity.
void solve(const std::vector<LabelRow>& rows, const std::vector<DerivedTheta>& thetas, std::size_t k,
           std::vector<std::size_t>& used, std::vector<std::size_t>& pick, std::vector<std::vector<std::size_t>>& all) {
  if (k == rows.size()) {
    all.push_back(pick);
    return;
  }
  for (auto t : rows[k].candidates) {
    if (used[t] == thetas[t].fiber) continue;
    ++used[t];
    pick[k] = t;
    solve(rows, thetas, k + 1, used, pick, all);
    --used[t];
  }
}

// W element taking atlas's printed highest weights (zeta-coordinates in the
// positive system of KGB #0) to the K-basis forms, fixed by known pairs.
std::vector<WeylElement> atlas_conversions(const RootDatum& d, const std::vector<std::pair<Coords6, KTypeWeight>>& known) {
  std::vector<WeylElement> out;
  for (const auto& w : generate_group(d, simple_indices(RootSystem::full))) {
    bool ok = true;
    for (const auto& [a, mu] : known) {
      if (w(d.from_zeta(a)) != d.ktype_to_ambient(mu)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(w);
  }
  return out;
}

Coords6 int_coords(const nlohmann::json& j) {
  Coords6 c{};
  for (std::size_t i = 0; i < kRank; ++i) c[i] = j.at(i).get<std::int64_t>();
  return c;
}

}  // namespace

int main(int argc, char** argv) try {
  const std::filesystem::path dir = argc > 1 ? std::filesystem::path(argv[1]) : fixture_dir();
  const auto& d = e6_datum();

  // ---- involutions
  const auto thetas = derive_thetas(d);
  std::size_t records = 0;
  for (const auto& t : thetas) records += t.fiber;
  std::cout << "distinct involutions: " << thetas.size() << ", KGB records: " << records << "\n";
  if (records != fully_supported_kgb_indices().size()) throw std::runtime_error("record count differs from the fully supported list");

  std::vector<LabelRow> rows;
  for (const auto& r : load_scattered(dir / "scattered.tsv")) rows.push_back({r.x, r.lambda, r.nu, r.infchar, {}});
  for (const auto& r : load_integral(dir / "fs_integral.tsv")) rows.push_back({r.x, r.lambda, r.nu, r.infchar, {}});
  for (auto& row : rows) {
    for (std::size_t t = 0; t < thetas.size(); ++t) {
      if (nu_of(d, row.infchar, thetas[t].rec) != d.from_zeta(row.nu)) continue;
      if (infchar_from_parameter(d, thetas[t].rec, row.lambda, row.nu) != row.infchar) continue;
      row.candidates.push_back(t);
    }
    if (row.candidates.empty()) throw std::runtime_error("no derived involution fits x=" + std::to_string(row.x));
  }
  std::vector<std::size_t> used(thetas.size(), 0), pick(rows.size());
  std::vector<std::vector<std::size_t>> solutions;
  solve(rows, thetas, 0, used, pick, solutions);
  if (solutions.empty()) throw std::runtime_error("table rows cannot be placed within the fiber sizes");
  std::cout << "label assignments consistent with the tables: " << solutions.size() << "\n";

  const auto& chosen = solutions.front();
  std::map<std::size_t, std::vector<std::int64_t>> labels;
  std::size_t forced = 0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    labels[chosen[k]].push_back(rows[k].x);
    bool same = true;
    for (const auto& s : solutions) same = same && s[k] == chosen[k];
    if (same) ++forced;
    else std::cout << "  x=" << rows[k].x << " not forced (" << rows[k].candidates.size() << " candidate involutions)\n";
  }
  std::cout << "rows with a forced involution: " << forced << "/" << rows.size() << "\n";

  std::vector<InvolutionRecord> out;
  for (std::size_t t = 0; t < thetas.size(); ++t) {
    auto xs = labels[t];
    std::sort(xs.begin(), xs.end());
    for (std::size_t k = 0; k < thetas[t].fiber; ++k) {
      InvolutionRecord r = thetas[t].rec;
      r.kgb_index = k < xs.size() ? xs[k] : -1;
      out.push_back(r);
    }
  }
  {
    std::ofstream f(dir / "kgb_involutions.json");
    f << serialize_involutions(out);
  }

  // ---- atlas weights of the failure case
  std::vector<std::pair<Coords6, KTypeWeight>> known;
  for (const char* name : {"branch_ex61.json", "branch_ex62.json"}) {
    const auto j = nlohmann::json::parse(detail::read_file(dir / name));
    const auto& kt = j.at("ktypes");
    const auto& aw = j.at("atlas_weights");
    for (std::size_t i = 0; i < kt.size(); ++i) known.emplace_back(int_coords(aw.at(i)), detail::json_ktype(kt[i][0]));
  }
  const auto conv = atlas_conversions(d, known);
  std::cout << "W elements matching the " << known.size() << " known atlas weights: " << conv.size() << "\n";
  if (conv.empty()) throw std::runtime_error("no coordinate conversion fits the known pairs");

  auto fj = nlohmann::json::parse(detail::read_file(dir / "failure_0011117.json"));
  std::vector<KTypeWeight> converted;
  for (const auto& a : fj.at("atlas_weights")) {
    const AmbientVector v = d.from_zeta(int_coords(a));
    // A K-type is determined up to W(k): compare compact-dominant images.
    auto image = [&](const WeylElement& w) {
      return d.ambient_to_ktype(make_dominant(d, w(v), RootSystem::compact).vector);
    };
    const KTypeWeight mu = image(conv.front());
    for (const auto& w : conv)
      if (image(w) != mu) throw std::runtime_error("conversion is ambiguous for " + a.dump());
    if (!is_ktype_weight(mu)) throw std::runtime_error("converted weight " + to_string(mu) + " is not a K-type");
    converted.push_back(mu);
  }
  fj["lkts"] = nlohmann::json::array();
  for (const auto& mu : converted) fj["lkts"].push_back(detail::ktype_json(mu));
  {
    std::ofstream f(dir / "failure_0011117.json");
    f << fj.dump(2) << "\n";
  }
  std::cout << "converted " << converted.size() << " failure-case LKTs\n";
  return 0;
} catch (const std::exception& e) {
  std::cerr << "fixturegen: " << e.what() << "\n";
  return 1;
}
