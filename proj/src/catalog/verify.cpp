#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>

#include "liefix/catalog.hpp"

namespace liefix {

namespace {

// Runs body(i) for i in [0, count) on a few threads; results land by index.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  auto run = [&]() {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

void compare(std::vector<std::string>& diffs, const char* field, bool expected, bool got) {
  if (expected != got) diffs.push_back(std::string(field) + ": expected " + yes_no(expected) + ", got " + yes_no(got));
}

EntryCheck check_entry(const CatalogEntry& e) {
  EntryCheck c;
  c.label = e.label();
  c.dim = e.algebra.dim();
  c.expected = e.expected;
  const LieAlgebra& g = e.algebra;
  c.solvable = is_solvable(g);
  c.nilpotent = is_nilpotent(g);
  UnimodularityReport u = unimodularity_report(g);
  c.unimodular = u.unimodular;
  c.strongly_unimodular = u.strongly_unimodular;
  try {
    FpfDecision d = route_fpf(g);
    c.fpf = d.verdict;
    c.engine = d.engine;
    if (d.witness && d.witness->order.status == OrderStatus::Finite) c.witness_order = d.witness->order.order;
    if (d.verdict == Verdict::Yes) {
      if (!d.witness || !d.witness->certified()) c.diffs.push_back("verdict Yes without a certified witness");
      if (!c.strongly_unimodular) c.diffs.push_back("certified witness on an algebra that is not strongly unimodular");
    }
  } catch (const Error& err) {
    c.fpf = Verdict::Unknown;
    c.engine = "error";
    c.diffs.push_back(std::string("fpf engine failed: ") + err.what());
  }
  compare(c.diffs, "solvable", e.expected.solvable, c.solvable);
  compare(c.diffs, "nilpotent", e.expected.nilpotent, c.nilpotent);
  compare(c.diffs, "unimodular", e.expected.unimodular, c.unimodular);
  compare(c.diffs, "strongly_unimodular", e.expected.strongly_unimodular, c.strongly_unimodular);
  if (c.fpf == Verdict::Unknown)
    c.diffs.push_back("fpf: expected " + yes_no(e.expected.fpf_exists) + ", got Unknown");
  else
    compare(c.diffs, "fpf_exists", e.expected.fpf_exists, c.fpf == Verdict::Yes);
  return c;
}

struct FamilyCase {
  std::string family;
  std::vector<CycScalar> params;
  bool expect_fpf;
  std::optional<unsigned long> claimed;
};

std::vector<FamilyCase> family_grid() {
  std::vector<FamilyCase> out;
  for (long n = 2; n <= 5; ++n) out.push_back({"abelian", {CycScalar(4), CycScalar(n)}, true, n});
  for (long n = 3; n <= 8; ++n) out.push_back({"n3", {CycScalar(n)}, true, n});
  for (long n = 4; n <= 8; ++n) {
    CycScalar z = CycScalar::zeta(static_cast<unsigned>(n));
    out.push_back({"n4", {z, z}, true, n});
  }
  for (long m = 2; m <= 6; ++m) out.push_back({"r3m1", {CycScalar(m)}, true, 2 * m});
  for (long m = 2; m <= 5; ++m) out.push_back({"g9w", {CycScalar(m)}, true, 3 * m});
  for (long m = 3; m <= 6; ++m) out.push_back({"g10m1", {CycScalar(m)}, true, 2 * m});
  // m = 2 is excluded: det(phi - I) = 0.
  out.push_back({"g10m1", {CycScalar(2)}, false, std::nullopt});
  return out;
}

FamilyCheck check_family(const FamilyCase& fc) {
  FamilyCheck c;
  c.family = fc.family;
  c.params = fc.params;
  c.expect_fpf = fc.expect_fpf;
  c.claimed_order = fc.claimed;
  CatalogEntry host = family_host(fc.family, fc.params);
  c.host = host.label();
  AutomorphismReport rep = check_automorphism(host.algebra, family_automorphism(fc.family, fc.params));
  c.is_morphism = rep.is_morphism;
  c.is_fpf = rep.is_fpf;
  if (rep.order.status == OrderStatus::Finite) c.order = rep.order.order;
  if (!c.is_morphism) c.diffs.push_back("not an automorphism");
  compare(c.diffs, "fpf", fc.expect_fpf, c.is_fpf);
  if (fc.claimed && c.order != fc.claimed)
    c.diffs.push_back("order: claimed " + std::to_string(*fc.claimed) + ", got " +
                      (c.order ? std::to_string(*c.order) : std::string("none within bound")));
  return c;
}

}  // namespace

std::size_t CatalogReport::passed() const {
  std::size_t k = 0;
  for (const auto& e : entries) k += e.pass();
  for (const auto& f : families) k += f.pass();
  return k;
}

std::size_t CatalogReport::failed() const { return entries.size() + families.size() - passed(); }

std::vector<FamilyCheck> verify_families(std::optional<std::size_t> dim) {
  std::vector<FamilyCase> cases;
  for (auto& fc : family_grid())
    if (!dim || family_host(fc.family, fc.params).algebra.dim() == *dim) cases.push_back(std::move(fc));
  std::vector<FamilyCheck> out(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) { out[i] = check_family(cases[i]); });
  return out;
}

CatalogReport verify_catalog(std::optional<std::size_t> dim) {
  CatalogReport rep;
  rep.dim = dim;
  std::vector<CatalogEntry> entries = catalog_samples(dim);
  rep.entries.resize(entries.size());
  parallel_for(entries.size(), [&](std::size_t i) { rep.entries[i] = check_entry(entries[i]); });
  rep.families = verify_families(dim);
  return rep;
}

}  // namespace liefix
