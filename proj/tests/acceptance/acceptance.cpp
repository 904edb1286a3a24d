// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "leavitt/checks.hpp"
#include "leavitt/corpus.hpp"

using namespace leavitt;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Criterion {
  std::vector<PropertyResult> parts;
  std::string extra;
  bool extra_ok = true;

  void add(PropertyResult r, const std::string& where) {
    r.name = where + " " + r.name;
    parts.push_back(std::move(r));
  }
};

std::map<std::string, GraphPtr> graphs() {
  std::map<std::string, GraphPtr> out;
  for (const std::string& name : reference_graph_names()) out[name] = reference_graph(name);
  return out;
}

bool report(int number, const std::string& title, const Criterion& c, double seconds) {
  std::size_t cases = 0;
  const PropertyResult* failed = nullptr;
  for (const PropertyResult& r : c.parts) {
    cases += r.cases;
    if (!r.passed() && !failed) failed = &r;
  }
  bool ok = !failed && c.extra_ok;
  std::cout << (ok ? "PASS" : "FAIL") << " C" << number << " " << title << ": " << c.parts.size()
            << " checks, " << cases << " cases";
  if (!c.extra.empty()) std::cout << "; " << c.extra;
  if (failed) std::cout << "; first failure in " << failed->name << ": " << failed->first_failure;
  std::cout << " (" << static_cast<int>(seconds * 1000) << " ms)" << std::endl;
  return ok;
}

template <class F>
bool criterion(int number, const std::string& title, F&& body) {
  auto start = std::chrono::steady_clock::now();
  Criterion c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.extra_ok = false;
    c.extra += std::string("threw ") + e.what();
  }
  std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  return report(number, title, c, took.count());
}

const CorpusEntry& find(const std::vector<CorpusEntry>& all, const std::string& name) {
  for (const CorpusEntry& e : all) {
    if (e.name == name) return e;
  }
  throw std::runtime_error("no corpus entry " + name);
}

}  // namespace

int main() {
  auto g = graphs();
  const std::vector<CorpusEntry> all = corpus();
  bool ok = true;

  ok &= criterion(1, "Steinberg model soundness", [&](Criterion& c) {
    for (const auto& [name, graph] : g) {
      for (Ring ring : {Ring::Integer, Ring::Gaussian}) {
        c.add(check_leavitt_family(graph, ring), name + (ring == Ring::Integer ? "/int" : "/gauss"));
      }
      c.add(check_convolution(graph, Ring::Integer, kSeed, 200, 50), name);
    }
  });

  ok &= criterion(2, "normalizer supports are isotropic", [&](Criterion& c) {
    for (const auto& [name, graph] : g) c.add(check_support_isotropy(graph, Ring::Integer, kSeed, 100, 10), name);
  });

  ok &= criterion(3, "partial action laws", [&](Criterion& c) {
    for (const auto& [name, graph] : g) {
      c.add(check_conjugation_law(graph, Ring::Integer, kSeed, 100), name);
      c.add(check_action_composition(graph, Ring::Integer, kSeed, 100, 50), name);
    }
  });

  ok &= criterion(4, "isolated path laws", [&](Criterion& c) {
    for (const std::string name : {"loop", "cycle2"}) {
      c.add(check_compression_shape(g[name], Ring::Integer, kSeed, 100), name);
      c.add(check_compression_scalar(g[name], Ring::Integer, kSeed, 100), name);
      c.add(check_projection_intertwining(g[name], Ring::Integer, kSeed, 50), name);
    }
  });

  ok &= criterion(5, "Weyl groupoid and phi", [&](Criterion& c) {
    std::map<std::string, BranchCounts> branches;
    for (const auto& [name, graph] : g) {
      c.add(check_weyl_equivalence(graph, Ring::Integer, kSeed, 100), name);
      c.add(check_phi_homomorphism(graph, Ring::Integer, kSeed, 100), name);
      c.add(check_phi_round_trips(graph, Ring::Integer, kSeed, 100), name);
      branches[name] = phi_inverse_branches(graph, Ring::Integer, kSeed, 100);
    }
    // No isolated path fails to be eventually periodic on a finite graph, so
    // that branch must stay unused.
    std::size_t aperiodic = 0;
    for (const auto& [name, b] : branches) aperiodic += b.isolated_aperiodic;
    c.extra_ok = branches["2loop"].non_isolated > 0 && branches["cycle2e"].non_isolated > 0 &&
                 branches["loop"].isolated_periodic > 0 && branches["cycle2"].isolated_periodic > 0 &&
                 aperiodic == 0;
    c.extra = "branches non-isolated 2loop=" + std::to_string(branches["2loop"].non_isolated) +
              " cycle2e=" + std::to_string(branches["cycle2e"].non_isolated) +
              ", isolated-periodic loop=" + std::to_string(branches["loop"].isolated_periodic) +
              " cycle2=" + std::to_string(branches["cycle2"].isolated_periodic) +
              ", isolated-aperiodic=" + std::to_string(aperiodic) + " (none exist)";
  });

  ok &= criterion(6, "Stone duality and kappa", [&](Criterion& c) {
    for (const auto& [name, graph] : g) c.add(check_boolean_laws(graph, kSeed, 200), name);
    std::vector<std::pair<std::string, VerifiedIso>> isos;
    for (const auto& [name, graph] : g) {
      isos.emplace_back("identity-" + name, VerifiedIso::verify(identity_spec(graph, Ring::Integer), 4));
    }
    for (const std::string name : {"swap-2loop", "swap-cycle2", "rename-loop", "rename-cycle2e",
                                   "conjugation-2loop"}) {
      isos.emplace_back(name, VerifiedIso::verify(find(all, name).spec, 4));
    }
    for (const auto& [name, iso] : isos) {
      c.add(check_kappa_iff(iso, 4, 20, 20, kSeed), name);
      c.add(check_kappa_support_law(iso, kSeed, 20), name);
      c.add(check_kappa_isolated(iso), name);
      c.add(check_kappa_domain(iso, kSeed, 20), name);
      c.add(check_kappa_equivariance(iso, kSeed, 20), name);
    }
  });

  ok &= criterion(7, "iso round trip and negative controls", [&](Criterion& c) {
    // Both generators go to 1_{Z(a,v)}, so s_a^* s_b lands on p_v; the sum
    // image of s_a makes pi(s_a s_a^*) the full 2x2 block.
    const std::map<std::string, std::string> witnesses{
        {"duplicate-2loop", "pi(s_a^*) pi(s_b) = 1*[v|v], expected 0"},
        {"nondiagonal-2loop", "pi(1_Z(a)) = 1*[a|a] + 1*[b|a] + 1*[a|b] + 1*[b|b] is not diagonal"},
    };
    std::size_t rejected = 0;
    for (const CorpusEntry& e : all) {
      if (e.rejected_by) {
        PropertyResult r = check_negative_control(e);
        auto expected = witnesses.find(e.name);
        r.check(expected != witnesses.end() && r.notes == expected->second, "witness was '" + r.notes + "'");
        c.add(std::move(r), e.name);
        ++rejected;
      } else {
        c.add(check_main_round_trip(e, kSeed, 100), e.name);
      }
    }
    c.extra_ok = rejected == 2;
    c.extra = std::to_string(all.size() - rejected) + " specs round-tripped, " + std::to_string(rejected) +
              " negative controls";
  });

  ok &= criterion(8, "oracle validation of the depth reductions", [&](Criterion& c) {
    for (const std::string name : {"2loop", "cycle2e"}) {
      c.add(check_normalizer_bound(g[name], Ring::Integer), name);
      c.add(check_normalizer_bound(g[name], Ring::Gaussian), name + "/gauss");
      c.add(check_germ_reduction(g[name]), name);
    }
  });

  return ok ? 0 : 1;
}
