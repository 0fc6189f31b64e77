#include "lalgebra/suites.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "lalgebra/error.hpp"
#include "lalgebra/fixtures.hpp"
#include "lalgebra/generators.hpp"
#include "lalgebra/limits.hpp"
#include "lalgebra/npi.hpp"
#include "lalgebra/plonka.hpp"
#include "lalgebra/sum.hpp"

namespace lalgebra {

using json = nlohmann::ordered_json;

namespace {

/// Accumulates check outcomes; passes are summarized per claim (the
/// instance field of a pass entry carries the count), failures are kept
/// individually with their witnesses.
class Recorder {
 public:
  Recorder(std::string suite, const SuiteOptions& opt) {
    report_.suite = std::move(suite);
    report_.seed = opt.seed;
  }

  void record(int instance, const std::string& claim, bool ok, std::string witness = "") {
    ++report_.checks_run;
    if (ok) {
      auto it = pass_counts_.find(claim);
      if (it == pass_counts_.end()) {
        claim_order_.push_back(claim);
        pass_counts_[claim] = 1;
      } else {
        ++it->second;
      }
    } else {
      ++report_.checks_failed;
      failures_.push_back({instance, claim, false, std::move(witness)});
    }
  }

  SuiteReport finish(int instances) {
    report_.instances = instances;
    report_.passed = report_.checks_failed == 0 && report_.checks_run > 0;
    for (const auto& claim : claim_order_) {
      report_.checks.push_back({pass_counts_.at(claim), claim, true, ""});
    }
    for (auto& f : failures_) report_.checks.push_back(std::move(f));
    return std::move(report_);
  }

 private:
  SuiteReport report_;
  std::vector<std::string> claim_order_;
  std::map<std::string, int> pass_counts_;
  std::vector<CheckResult> failures_;
};

std::string table_witness(const FiniteAlgebra& a) {
  json j;
  j["size"] = a.size();
  j["table"] = a.table(0);
  return j.dump();
}

PreservingTuple identity_tuple(const Covering& cov) {
  PreservingTuple t;
  for (int j = 0; j < cov.base().size(); ++j) {
    t.push_back(Congruence::identity(static_cast<int>(downset_algebra(cov, j).members.size())));
  }
  return t;
}

std::vector<int> identity_map(int n) {
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  return id;
}

}  // namespace

std::string SuiteReport::to_json() const {
  json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["instances"] = instances;
  j["passed"] = passed;
  j["checks_run"] = checks_run;
  j["checks_failed"] = checks_failed;
  json arr = json::array();
  for (const auto& c : checks) {
    json e;
    e["claim"] = c.claim;
    e["status"] = c.passed ? "pass" : "fail";
    if (c.passed) {
      e["count"] = c.instance;
    } else {
      e["instance"] = c.instance;
      if (!c.witness.empty()) e["witness"] = c.witness;
    }
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  return j.dump(2) + "\n";
}

SuiteReport suite_idempotent_npi_equivalences(const SuiteOptions& opt) {
  Recorder rec("prop4.7", opt);
  int maxn = opt.max_size > 0 ? std::min(opt.max_size, 3) : 3;
  Signature sig = fixtures::sig1();
  int instance = 0;
  for (int n = 1; n <= maxn; ++n) {
    std::vector<int> table(n * n, 0);
    while (true) {
      FiniteAlgebra a(sig, n, {table});
      bool idem = is_idempotent(a);
      rec.record(instance, "idempotency agrees with the constant-endomorphism test",
                 idem == constant_endomorphism_check(a), table_witness(a));
      if (idem) {
        NpiCharacterization ch = npi_characterization(a);
        bool agree = ch.monotone == ch.bounded && ch.bounded == ch.quotient;
        rec.record(instance, "the three natural-preorder characterizations agree", agree,
                   table_witness(a));
        rec.record(instance, "characterizations match the direct natural-preorder test",
                   ch.monotone == is_naturally_preordered(a), table_witness(a));
        if (ch.all()) {
          rec.record(instance, "the symmetrized-preorder quotient is a join-table algebra",
                     ch.witness.has_value(), table_witness(a));
        }
      }
      ++instance;
      int k = n * n - 1;
      while (k >= 0 && table[k] == n - 1) table[k--] = 0;
      if (k < 0) break;
      ++table[k];
    }
  }
  return rec.finish(instance);
}

SuiteReport suite_sum_projection(const SuiteOptions& opt) {
  Recorder rec("prop5.2", opt);
  int count = opt.instances > 0 ? opt.instances : 200;
  int max_ambient = opt.max_size > 0 ? opt.max_size : 4;
  Rng rng(opt.seed);
  for (int k = 0; k < count; ++k) {
    try {
      LallementSystem sys = random_semi_inductive_system(rng, 3, max_ambient);
      SumResult sum = lallement_sum(sys);
      rec.record(k, "the sum projection is a homomorphism",
                 is_homomorphism(sum.algebra, sys.base(), sum.projection.map()));
      rec.record(k, "the sum projection is surjective", sum.projection.is_surjective());
      bool fibers_ok = true;
      for (int p = 0; p < sum.algebra.size(); ++p) {
        if (sum.projection(p) != sum.block_of(p)) fibers_ok = false;
      }
      rec.record(k, "projection fibers are exactly the summand blocks", fibers_ok);
      LabeledMorphism idm = identity_labeled(sys);
      rec.record(k, "exactly one homomorphism restricts to the identity components",
                 count_induced_sum_morphisms(idm) == 1);
    } catch (const Error& e) {
      rec.record(k, "sum construction completes", false, e.what());
    }
  }
  return rec.finish(count);
}

SuiteReport suite_functor_laws(const SuiteOptions& opt) {
  Recorder rec("prop5.5", opt);
  int count = opt.instances > 0 ? opt.instances : 100;
  int max_alg = opt.max_size > 0 ? opt.max_size : 3;
  Rng rng(opt.seed);
  for (int k = 0; k < count; ++k) {
    try {
      ComposablePair pair = random_composable_pair(rng, 3, max_alg);
      SumResult src_sum = lallement_sum(pair.f.source);

      Homomorphism sum_id = sum_morphism(identity_labeled(pair.f.source));
      rec.record(k, "the identity morphism sums to the identity map",
                 sum_id.map() == identity_map(src_sum.algebra.size()));

      LabeledMorphism gf = compose_labeled(pair.g, pair.f);
      rec.record(k, "the composite is a valid labeled morphism", validate_labeled(gf).empty());
      Homomorphism once = sum_morphism(gf);
      Homomorphism twice = compose_homs(sum_morphism(pair.g), sum_morphism(pair.f));
      rec.record(k, "the sum of a composite equals the composite of the sums",
                 once.map() == twice.map());
    } catch (const Error& e) {
      rec.record(k, "functor-law checks complete", false, e.what());
    }
  }
  return rec.finish(count);
}

SuiteReport suite_sum_blocks(const SuiteOptions& opt) {
  Recorder rec("prop6.3", opt);
  int count = opt.instances > 0 ? opt.instances : 200;
  int max_ambient = opt.max_size > 0 ? opt.max_size : 4;
  Rng rng(opt.seed);
  for (int k = 0; k < count; ++k) {
    try {
      LallementSystem sys = random_semi_inductive_system(rng, 3, max_ambient);
      SumResult sum = lallement_sum(sys);
      bool all_ok = true;
      std::string witness;
      for (int i = 0; i < sys.index_count() && all_ok; ++i) {
        SumComponent comp = sum_component(sum, i);
        const auto& members = sys.pair(i).members;
        if (comp.to_member != members ||
            static_cast<int>(comp.block.members().size()) != sum.block_size(i)) {
          all_ok = false;
          witness = "block " + std::to_string(i);
        }
      }
      rec.record(k, "every block is closed and isomorphic to its member subalgebra", all_ok,
                 witness);
    } catch (const Error& e) {
      rec.record(k, "block checks complete", false, e.what());
    }
  }
  return rec.finish(count);
}

SuiteReport suite_factorization(const SuiteOptions& opt) {
  Recorder rec("prop6.10", opt);
  int count = opt.instances > 0 ? opt.instances : 50;
  int max_total = opt.max_size > 0 ? opt.max_size : 6;
  Rng rng(opt.seed);

  for (int k = 0; k < count; ++k) {
    try {
      FactorizationInstance inst =
          (k == 0 && opt.fixture)
              ? FactorizationInstance{*opt.fixture,
                                      build_system(*opt.fixture, identity_tuple(*opt.fixture)),
                                      TargetedMorphism{
                                          identity_hom(opt.fixture->base()),
                                          unit_morphism(*opt.fixture, identity_tuple(*opt.fixture))
                                              .total_map.map()}}
              : random_factorization_instance(rng, max_total, 3, 3);
      const Covering& cov = inst.cov;

      PreservingFamily adm = admissible_for_target(cov, inst.target, inst.morphism);
      PreservingTuple delta = identity_tuple(cov);
      rec.record(k, "the all-identity tuple is admissible", adm.contains(delta));

      std::int64_t tuple_count = adm.count();
      rec.record(k, "the admissible family fits the enumeration budget",
                 tuple_count >= 1 && tuple_count <= limits().pcgr_tuples,
                 "count " + std::to_string(tuple_count));

      if (tuple_count >= 1 && tuple_count <= limits().pcgr_tuples) {
        bool all_factor = true;
        std::string witness;
        for (const PreservingTuple& theta : adm.materialize()) {
          try {
            factorize(cov, inst.target, inst.morphism, theta);
          } catch (const Error& e) {
            all_factor = false;
            witness = e.what();
            break;
          }
        }
        rec.record(k, "every admissible tuple factors the morphism exactly", all_factor, witness);
      }

      UniquenessResult ur = verify_uniqueness(cov, inst.target, inst.morphism, delta);
      rec.record(k, "the factorizing morphism is unique within the search bound",
                 ur.status != UniquenessResult::Status::failed,
                 "found " + std::to_string(ur.found) + " of " + std::to_string(ur.candidates));

      UnitMorphism unit = unit_morphism(cov, delta);
      rec.record(k, "the all-identity sum reconstructs the covered algebra",
                 find_block_iso(cov, unit.sum).has_value());
    } catch (const Error& e) {
      rec.record(k, "factorization checks complete", false, e.what());
    }
  }
  return rec.finish(count);
}

SuiteReport suite_theta(const SuiteOptions& opt) {
  Recorder rec("theta", opt);
  int count = opt.instances > 0 ? opt.instances : 100;
  int max_alg = opt.max_size > 0 ? opt.max_size : 3;
  Rng rng(opt.seed);
  for (int k = 0; k < count; ++k) {
    try {
      InductiveSystem ind = random_inductive_system(rng, 3, max_alg);
      PlonkaSumResult ps = plonka_sum(ind);
      ThetaResult th = theta(ps);
      rec.record(k, "the absorption congruence equals the projection kernel",
                 th.phi == kernel(ps.projection));
      rec.record(k, "the collapse map is a bijective homomorphism", th.iso.is_bijective());

      SumResult ls = lallement_sum(inductive_to_lallement(ind));
      rec.record(k, "sum tables agree with the system-view sum",
                 ps.sum.algebra() == ls.algebra && ps.offsets == ls.offsets);
      bool proj_agree = ps.projection.map() == ls.projection.map();
      rec.record(k, "sum projections agree with the system-view projection", proj_agree);
    } catch (const Error& e) {
      rec.record(k, "collapse checks complete", false, e.what());
    }
  }
  return rec.finish(count);
}

SuiteReport suite_plonka_axioms(const SuiteOptions& opt) {
  Recorder rec("plonka-axioms", opt);
  int count = opt.instances > 0 ? opt.instances : 100;
  int max_alg = opt.max_size > 0 ? opt.max_size : 3;
  Rng rng(opt.seed);
  for (int k = 0; k < count; ++k) {
    try {
      InductiveSystem ind = random_inductive_system(rng, 3, max_alg);
      rec.record(k, "the generated system is valid", validate_inductive(ind).empty());
      PlonkaSumResult ps = plonka_sum(ind);
      auto violations = validate_plonka(ps.sum);
      std::string witness;
      for (const auto& v : violations) witness += v.condition + ": " + v.message + "; ";
      rec.record(k, "the partition-function laws hold on the sum", violations.empty(), witness);
      if (violations.empty()) {
        Congruence phi = induced_congruence(ps.sum);
        rec.record(k, "mutual absorption is a congruence with fiber blocks",
                   phi.block_count() == ind.base.size());
      }
      rec.record(k, "the projection lands on the base viewed as an algebra",
                 ps.projection.target() ==
                     semilattice_to_npi(ind.base, ind.algebras.at(0).signature()));
    } catch (const Error& e) {
      rec.record(k, "partition-function checks complete", false, e.what());
    }
  }
  return rec.finish(count);
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "prop4.7") return suite_idempotent_npi_equivalences(opt);
  if (name == "prop5.2") return suite_sum_projection(opt);
  if (name == "prop5.5") return suite_functor_laws(opt);
  if (name == "prop6.3") return suite_sum_blocks(opt);
  if (name == "prop6.10" || name == "multiadjoint") return suite_factorization(opt);
  if (name == "theta") return suite_theta(opt);
  if (name == "plonka-axioms") return suite_plonka_axioms(opt);
  throw UsageError("unknown suite '" + name + "'");
}

std::vector<std::string> suite_names() {
  return {"prop4.7", "prop5.2", "prop5.5", "prop6.3", "prop6.10", "theta", "plonka-axioms"};
}

}  // namespace lalgebra
