#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "fixtures.hpp"
#include "nested_oracle.hpp"

using namespace mixedtori;

namespace {

struct Pipeline {
  MultiplicityTable tab;
  WindingProfile prof;
};

Pipeline run(const std::string& s) {
  const auto p = parse(s);
  Pipeline out;
  out.tab = multiplicity_table(p, newton_boundary(support(p)));
  out.prof = winding_profile(out.tab);
  return out;
}

MultiplicityTable synthetic(const std::vector<int>& ms_t, const std::vector<int>& ms_phi) {
  MultiplicityTable t;
  t.ms_t = ms_t;
  t.ms_phi = ms_phi;
  return t;
}

std::set<int> fired_tori(const std::vector<CriterionOutcome>& outs) {
  std::set<int> s;
  for (const auto& o : outs) s.insert(o.essential_tori.begin(), o.essential_tori.end());
  return s;
}

}  // namespace

TEST(FastCriterion, Examples) {
  const auto o53 = fast_criterion(run(fixtures::kEx53).tab);
  EXPECT_TRUE(o53.fired);
  EXPECT_EQ(o53.essential_tori, (std::set<int>{1}));
  EXPECT_FALSE(fast_criterion(run(fixtures::kEx54).tab).fired);
  EXPECT_FALSE(fast_criterion(run(fixtures::kEx55).tab).fired);
}

TEST(FastCriterion, NeedsTwoFaces) {
  const auto o = fast_criterion(synthetic({0, 5}, {5, 0}));
  EXPECT_FALSE(o.fired);
  EXPECT_FALSE(o.reason.empty());
}

TEST(GeneralCriterion, Example54ThirdBranch) {
  const auto pl = run(fixtures::kEx54);
  const auto outs = general_criterion(pl.tab, pl.prof);
  ASSERT_EQ(outs.size(), 3u);
  EXPECT_FALSE(outs[0].fired);
  EXPECT_FALSE(outs[1].fired);
  EXPECT_TRUE(outs[2].fired);
  EXPECT_EQ(outs[2].id, CriterionId::thm1_2_iii);
  EXPECT_EQ(outs[2].essential_tori, (std::set<int>{2}));
  bool found = false;
  for (const auto& w : outs[2].evidence) {
    bool phi = false, w2 = false;
    for (const auto& q : w.inequalities) {
      phi = phi || (q.quantity.name() == "ms_phi[2]" && q.value == 2 && q.bound == 1);
      w2 = w2 || (q.quantity.name() == "w[2]" && q.value == 2 && q.bound == 0);
    }
    found = found || (phi && w2);
  }
  EXPECT_TRUE(found);
  for (const auto& o : outs) EXPECT_FALSE(o.caveats.empty());
}

TEST(GeneralCriterion, Example55NothingFires) {
  const auto pl = run(fixtures::kEx55);
  for (const auto& o : general_criterion(pl.tab, pl.prof)) EXPECT_FALSE(o.fired);
}

TEST(GeneralCriterion, RequiresThreeIndices) {
  const auto pl = run(fixtures::kEx53);
  for (const auto& o : general_criterion(pl.tab, pl.prof)) {
    EXPECT_FALSE(o.fired);
    EXPECT_NE(o.reason.find("n >= 3"), std::string::npos);
  }
}

TEST(GeneralCriterion, MiddleBranch) {
  // Four nonzero faces with w and w' both nonzero everywhere.
  const auto tab = synthetic({0, 1, 2, 3, 4}, {4, 3, 2, 1, 0});
  const auto prof = winding_profile(tab);
  const auto outs = general_criterion(tab, prof);
  EXPECT_EQ(outs[1].essential_tori, (std::set<int>{2}));
  EXPECT_FALSE(outs[0].fired);  // |ms_t[1]| = 1
  EXPECT_FALSE(outs[2].fired);  // |ms_phi[3]| = 1
}

TEST(CountCriterion, Examples) {
  EXPECT_TRUE(count_criterion(run(fixtures::kEx55).prof).fired);
  EXPECT_FALSE(count_criterion(run(fixtures::kEx53).prof).fired);
  EXPECT_FALSE(count_criterion(run(fixtures::kEx54).prof).fired);
}

TEST(AssembleVerdict, Examples) {
  auto verdict = [](const std::string& s) {
    const auto a = analyze(s);
    return *a.verdict;
  };
  const auto v53 = verdict(fixtures::kEx53);
  EXPECT_EQ(v53.tori.at(1), Essentiality::essential);
  EXPECT_TRUE(v53.non_hyperbolic);

  const auto v55 = verdict(fixtures::kEx55);
  for (const auto& [i, e] : v55.tori) EXPECT_EQ(e, Essentiality::unknown);
  EXPECT_TRUE(v55.reducible_or_toroidal);
  EXPECT_TRUE(v55.non_hyperbolic);

  const auto tab = synthetic({0, 1}, {1, 0});
  const auto prof = winding_profile(tab);
  const auto v = assemble_verdict(tab, prof, {fast_criterion(tab), count_criterion(prof)}, {});
  EXPECT_TRUE(v.tori.empty());
  EXPECT_FALSE(v.non_hyperbolic);
}

TEST(AssembleVerdict, InconclusiveBecomesCaveat) {
  const auto tab = synthetic({0, 2, 4}, {6, -2, 0});
  const auto prof = winding_profile(tab);
  HypothesisReport hyp;
  hyp.convenient = true;
  VertexCheck vc;
  vc.index = 1;
  vc.status = VertexStatus::inconclusive;
  hyp.vertices.push_back(vc);
  const auto v = assemble_verdict(tab, prof, {fast_criterion(tab)}, hyp);
  EXPECT_EQ(v.tori.at(1), Essentiality::essential);  // never downgraded
  const bool mentioned = std::any_of(v.caveats.begin(), v.caveats.end(),
                                     [](const std::string& c) { return c.find("inconclusive") != std::string::npos; });
  EXPECT_TRUE(mentioned);
}

// Every recorded inequality re-evaluates to true against the source data.
TEST(Properties, EvidenceSelfAudit) {
  std::vector<std::pair<MultiplicityTable, WindingProfile>> cases;
  for (const auto& s : fixtures::all()) {
    const auto pl = run(s);
    cases.emplace_back(pl.tab, pl.prof);
  }
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> nfaces(1, 6), val(-4, 4);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = nfaces(rng);
    std::vector<int> t(n + 1), phi(n + 1);
    for (int i = 1; i <= n; ++i) t[i] = val(rng);
    for (int i = 0; i < n; ++i) phi[i] = val(rng);
    t[0] = 0;
    phi[n] = 0;
    const auto tab = synthetic(t, phi);
    cases.emplace_back(tab, winding_profile(tab));
  }
  for (const auto& [tab, prof] : cases) {
    std::vector<CriterionOutcome> outs{fast_criterion(tab)};
    for (auto& o : general_criterion(tab, prof)) outs.push_back(o);
    outs.push_back(count_criterion(prof));
    for (const auto& o : outs) {
      EXPECT_TRUE(audit(o, tab, prof)) << to_string(o.id);
      if (o.fired) EXPECT_FALSE(o.evidence.empty());
      if (o.id == CriterionId::thm1_1) {
        // Lemma 4.3 cumulative windings on each side of a fired torus.
        for (int i : o.essential_tori) {
          EXPECT_GT(std::abs(prof.w_in[i - 1]), 1);
          EXPECT_GT(std::abs(prof.w_out[i]), 1);
        }
      }
    }
  }
}

// Adding faces with w = w' = 0 to the index set never removes an essential
// torus.
TEST(Properties, GeneralCriterionMonotone) {
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<int> nfaces(3, 5), val(-3, 3);
  std::bernoulli_distribution silent(0.35);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = nfaces(rng);
    std::vector<int> t(n + 1, 0), phi(n + 1, 0);
    // Build from per-face windings so some faces are silent.
    std::vector<int> w(n + 1), wp(n + 1);
    for (int i = 1; i <= n; ++i) {
      if (silent(rng)) continue;
      w[i] = val(rng);
      wp[i] = val(rng);
    }
    for (int i = 1; i <= n; ++i) t[i] = t[i - 1] + w[i];
    for (int i = n; i >= 1; --i) phi[i - 1] = phi[i] + wp[i];
    const auto tab = synthetic(t, phi);
    const auto prof = winding_profile(tab);
    std::vector<int> extra;
    for (int i = 1; i <= n; ++i) {
      if (!prof.certified_nonempty.count(i)) extra.push_back(i);
    }
    const auto base = fired_tori(general_criterion(tab, prof));
    for (unsigned mask = 1; mask < (1u << extra.size()); ++mask) {
      std::set<int> bigger = prof.certified_nonempty;
      for (std::size_t k = 0; k < extra.size(); ++k) {
        if (mask & (1u << k)) bigger.insert(extra[k]);
      }
      const auto grown = fired_tori(general_criterion(tab, prof, bigger));
      for (int torus : base) EXPECT_TRUE(grown.count(torus)) << "torus " << torus;
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

// ---------------------------------------------------------------------------
// Nested characterization

namespace {

NestedLinkSpec spec_of(const std::vector<int>& wraps, const std::vector<std::optional<bool>>& trivial = {}) {
  NestedLinkSpec s;
  s.n = static_cast<int>(wraps.size());
  for (std::size_t k = 0; k < wraps.size(); ++k) {
    NestedComponent c;
    c.wrap = wraps[k];
    if (k < trivial.size()) c.is_trivial_knot = trivial[k];
    s.components.push_back(c);
  }
  return s;
}

}  // namespace

TEST(Nested, Examples) {
  EXPECT_EQ(nested_characterization(spec_of({2, 2}))[0].status, Essentiality::essential);
  EXPECT_EQ(nested_characterization(spec_of({1, 2}, {true, false}))[0].status, Essentiality::not_essential);
  EXPECT_EQ(nested_characterization(spec_of({1, 0, 1, 1}))[1].status, Essentiality::essential);
  EXPECT_EQ(nested_characterization(spec_of({1, 1}, {true, true}))[0].status, Essentiality::not_essential);
  EXPECT_EQ(nested_characterization(spec_of({1, 2}))[0].status, Essentiality::unknown);
}

TEST(Nested, InvalidSpecs) {
  auto kind_of = [](NestedLinkSpec s) {
    try {
      nested_characterization(s);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::SyntaxError;
  };
  EXPECT_EQ(kind_of(spec_of({3})), ErrorKind::InvalidSpec);
  auto s = spec_of({1, 1});
  s.components[0].winding = 2;
  EXPECT_EQ(kind_of(s), ErrorKind::InvalidSpec);
  s = spec_of({1, 1});
  s.n = 3;
  EXPECT_EQ(kind_of(s), ErrorKind::InvalidSpec);
  s = spec_of({1, 1});
  s.components[0].is_knot = false;
  s.components[0].is_trivial_knot = true;
  EXPECT_EQ(kind_of(s), ErrorKind::InvalidSpec);
}

TEST(Nested, ReducibleOrToroidal) {
  EXPECT_FALSE(nested_reducible_or_toroidal(spec_of({1, 1, 1})));
  EXPECT_TRUE(nested_reducible_or_toroidal(spec_of({0, 0, 0, 0})));
}

TEST(Nested, AgreesWithDecisionTableExhaustively) {
  const auto [checked, disagreements] = nested_oracle::exhaustive_check(5, 3);
  EXPECT_EQ(disagreements, 0);
  EXPECT_GT(checked, 1000000);
}

TEST(NestedSpecDocument, Parse) {
  const auto s = parse_nested_spec("# comment\nn=2\nwrap=2 winding=1 knot=true trivial=unknown\n\nwrap=1 winding=-1 knot=false\n");
  EXPECT_EQ(s.n, 2);
  ASSERT_EQ(s.components.size(), 2u);
  EXPECT_EQ(s.components[0].wrap, 2);
  EXPECT_FALSE(s.components[0].is_trivial_knot.has_value());
  EXPECT_FALSE(s.components[1].is_knot);
  EXPECT_EQ(s.components[1].winding, -1);
  for (const char* bad : {"wrap=1 winding=0\n", "n=2\nwrap=x winding=0\nwrap=1 winding=0\n",
                          "n=2\nwrap=1 winding=0 color=red\nwrap=1 winding=0\n", "n=3\nwrap=1 winding=0\n"}) {
    EXPECT_THROW(parse_nested_spec(bad), Error) << bad;
  }
}
