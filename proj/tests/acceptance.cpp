// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "cli_runner.hpp"
#include "fixtures.hpp"
#include "nested_oracle.hpp"

using namespace mixedtori;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.notes << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!c.ok) ++failures;
  std::printf("%s criterion %d: %s (%.2f s)%s\n", c.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              c.notes.str().c_str());
}

double timed(const std::function<void()>& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Tables {
  std::vector<int> ms_t, ms_phi, w, wprime;
};

}  // namespace

int main() {
  criterion(1, "table reproduction for Examples 5.3-5.5", [](Check& c) {
    const std::vector<std::pair<std::string, Tables>> cases{
        {fixtures::kEx53, {{0, 2, 4}, {6, -2, 0}, {2, 2}, {8, -2}}},
        {fixtures::kEx54, {{0, -1, 1, 5}, {9, 6, 2, 0}, {-1, 2, 4}, {3, 4, 2}}},
        {fixtures::kEx55, {{0, 1, 2, 3, 4}, {0, 0, 0, 0, 0}, {1, 1, 1, 1}, {0, 0, 0, 0}}},
    };
    for (const auto& [poly, want] : cases) {
      Analysis a;
      const double secs = timed([&] { a = analyze(poly); });
      c.expect(a.table && a.profile, poly + " analyzed");
      if (!a.table || !a.profile) continue;
      c.expect(a.table->ms_t == want.ms_t, poly + " ms_t");
      c.expect(a.table->ms_phi == want.ms_phi, poly + " ms_phi");
      c.expect(a.profile->w == want.w, poly + " w");
      c.expect(a.profile->wprime == want.wprime, poly + " wprime");
      c.expect(secs < 2.0, poly + " under 2 s");
    }
  });

  criterion(2, "verdict reproduction", [](Check& c) {
    auto fired = [](const Verdict& v, CriterionId id) {
      for (const auto& o : v.outcomes) {
        if (o.id == id) return o.fired;
      }
      return false;
    };
    const auto v53 = *analyze(fixtures::kEx53).verdict;
    c.expect(fired(v53, CriterionId::thm1_1), "5.3 thm1.1 fires");
    c.expect(v53.tori.at(1) == Essentiality::essential, "5.3 torus 1 essential");
    c.expect(v53.non_hyperbolic, "5.3 non-hyperbolic");

    const auto a54 = analyze(fixtures::kEx54);
    const auto& v54 = *a54.verdict;
    c.expect(!fired(v54, CriterionId::thm1_1), "5.4 thm1.1 silent");
    c.expect(fired(v54, CriterionId::thm1_2_iii), "5.4 thm1.2(iii) fires");
    c.expect(v54.tori.at(2) == Essentiality::essential, "5.4 torus 2 essential");
    c.expect(v54.tori.at(1) == Essentiality::unknown, "5.4 torus 1 unknown");
    c.expect(v54.non_hyperbolic, "5.4 non-hyperbolic");
    c.expect(a54.profile->certified_nonempty == std::set<int>{1, 2, 3}, "5.4 I = {1,2,3}");

    const auto v55 = *analyze(fixtures::kEx55).verdict;
    c.expect(!fired(v55, CriterionId::thm1_1), "5.5 thm1.1 silent");
    for (auto id : {CriterionId::thm1_2_i, CriterionId::thm1_2_ii, CriterionId::thm1_2_iii}) {
      c.expect(!fired(v55, id), "5.5 thm1.2 silent");
    }
    c.expect(fired(v55, CriterionId::thm1_3), "5.5 thm1.3 fires");
    c.expect(v55.non_hyperbolic, "5.5 non-hyperbolic");
  });

  criterion(3, "signed multiplicity cross-check on Example 5.4 middle vertex", [](Check& c) {
    const auto f = face_function(parse(fixtures::kEx54), {{3, 2}});
    const auto h = to_homogeneous(specialize_t(f, 0.0), 3);
    const auto r = lemma51_multiplicity(h);
    c.expect(r.ms == 1, "ms = 1");
    c.expect(r.roots.size() == 2, "two roots");
    int inside = 0;
    for (const auto& root : r.roots) inside += root.inside;
    c.expect(inside == 1, "one root inside the unit circle");
    c.expect(degree_oracle(h.to_uni(), 0.01, 4096) == 1, "degree at radius 0.01");
    c.expect(degree_oracle(h.to_uni(), 100.0, 4096) == 1, "degree at radius 100");
    c.notes << " roots";
    for (const auto& root : r.roots) c.notes << " " << root.value.real() << (root.value.imag() < 0 ? "" : "+") << root.value.imag() << "i";
  });

  criterion(4, "property suites", [](Check& c) {
    int fails = 0;

    std::mt19937_64 rng(100);
    for (int k = 0; k < 100; ++k) {
      const auto h = fixtures::random_clear_homogeneous(rng, 8);
      const int ms = signed_multiplicity_at_zero(h).ms;
      if (degree_oracle(h.to_uni(), 0.01, 4096) != ms || degree_oracle(h.to_uni(), 100.0, 4096) != ms) ++fails;
    }
    c.expect(fails == 0, "oracle equivalence");
    c.notes << " oracle:" << fails;

    fails = 0;
    std::mt19937_64 rng2(200);
    for (int k = 0; k < 200; ++k) {
      const auto a = fixtures::random_clear_homogeneous(rng2, 5);
      const auto b = fixtures::random_clear_homogeneous(rng2, 5);
      const int ma = signed_multiplicity_at_zero(a).ms, mb = signed_multiplicity_at_zero(b).ms;
      if (signed_multiplicity_at_zero(a * b).ms != ma + mb || signed_multiplicity_at_zero(conj(a)).ms != -ma) ++fails;
    }
    c.expect(fails == 0, "additivity/antisymmetry");
    c.notes << " additivity:" << fails;

    fails = 0;
    for (const auto& s : fixtures::all()) {
      const auto p = parse(s);
      const auto b = newton_boundary(support(p));
      const auto prof = winding_profile(multiplicity_table(p, b));
      for (int i = 1; i <= static_cast<int>(b.face_count()); ++i) {
        for (double angle : {0.3, 1.7, 4.1}) {
          if (winding_oracle(p, b, i, angle) != prof.w_at(i)) ++fails;
          if (winding_oracle_phi(p, b, i, angle) != prof.wprime_at(i)) ++fails;
        }
      }
    }
    c.expect(fails == 0, "winding formula vs annulus oracle");
    c.notes << " winding:" << fails;

    fails = 0;
    std::mt19937_64 rng3(77);
    std::uniform_int_distribution<int> count(0, 6), coord(1, 9);
    for (int k = 0; k < 20; ++k) {
      std::vector<MixedMonomial> terms{{fixtures::random_coeff(rng3), coord(rng3), 0, 0, 0},
                                       {fixtures::random_coeff(rng3), 0, coord(rng3), 0, 0}};
      const int extra = count(rng3);
      for (int e = 0; e < extra; ++e) terms.push_back({fixtures::random_coeff(rng3), coord(rng3), coord(rng3), 0, 0});
      const auto p = MixedPolynomial::from_terms(terms);
      const auto b = newton_boundary(support(p));
      const auto tab = multiplicity_table(p, b);
      for (std::size_t i = 0; i < b.vertices.size(); ++i) {
        if (tab.ms_t[i] != b.vertices[i].x || tab.ms_phi[i] != b.vertices[i].y) ++fails;
      }
    }
    c.expect(fails == 0, "holomorphic sanity");
    c.notes << " holomorphic:" << fails;

    const auto tally = nested_oracle::exhaustive_check(5, 3);
    c.expect(tally.disagreements == 0, "nested characterization vs decision table");
    c.notes << " nested:" << tally.disagreements << "/" << tally.checked;

    fails = 0;
    std::mt19937_64 rng4(2024);
    std::uniform_int_distribution<int> npts(1, 30), xy(0, 40);
    for (int k = 0; k < 500; ++k) {
      PointSet s;
      const int n = npts(rng4);
      while (static_cast<int>(s.size()) < n) s.insert({xy(rng4), xy(rng4)});
      const auto b = newton_boundary(s);
      bool good = b.faces.size() + 1 == b.vertices.size();
      for (std::size_t v = 2; v < b.vertices.size(); ++v) {
        good = good && cross(b.vertices[v - 2], b.vertices[v - 1], b.vertices[v]) > 0;
      }
      PointSet kept(b.vertices.begin(), b.vertices.end());
      for (const auto& f : b.faces) {
        const auto [w1, w2] = f.normal();
        std::int64_t best = w1 * f.left.x + w2 * f.left.y;
        for (const auto& q : s) best = std::min(best, w1 * q.x + w2 * q.y);
        for (const auto& q : s) good = good && ((w1 * q.x + w2 * q.y == best) == (f.points.count(q) == 1));
        kept.insert(f.points.begin(), f.points.end());
      }
      good = good && newton_boundary(kept).vertices == b.vertices;
      if (!good) ++fails;
    }
    c.expect(fails == 0, "Newton boundary invariants");
    c.notes << " newton:" << fails;
  });

  criterion(5, "byte-identical structured reports across two runs", [](Check& c) {
    for (const auto& s : fixtures::all()) {
      const auto a = cli::run({"analyze", s, "--out", "struct"});
      const auto b = cli::run({"analyze", s, "--out", "struct"});
      c.expect(a.code == 0 && b.code == 0, s + " exit 0");
      c.expect(!a.out.empty() && a.out == b.out, s + " identical");
    }
  });

  return failures == 0 ? 0 : 1;
}
