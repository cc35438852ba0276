#include <gtest/gtest.h>

#include <random>
#include <regex>
#include <sstream>

#include "oracles.hpp"
#include "orderdim/diagonal.hpp"
#include "support.hpp"

using namespace orderdim;

namespace {

ProgramSpec prog(ProgramSpec::Kind kind, std::size_t delay = 0) {
  ProgramSpec p;
  p.kind = kind;
  p.delay = delay;
  return p;
}

void expect_transcript_invariants(const DiagonalRun& run, std::size_t stages) {
  const auto& tr = run.transcript;
  ASSERT_EQ(tr.snapshots.size(), stages + 1);
  ASSERT_EQ(tr.flags.size(), stages + 1);
  for (const auto& inst : run.instances) EXPECT_NO_THROW(validate_instance(inst));
  // flags go 0 -> 1 at most once
  for (std::size_t e = 0; e < tr.assignment.size(); ++e)
    for (std::size_t s = 1; s < tr.flags.size(); ++s) EXPECT_LE(tr.flags[s - 1][e], tr.flags[s][e]);
  for (std::size_t j = 0; j < tr.k; ++j) {
    std::size_t moves = 0;
    for (std::size_t s = 1; s < tr.snapshots.size(); ++s) {
      EXPECT_EQ(tr.snapshots[s][j].order.size(), tr.snapshots[s - 1][j].order.size() + 2);
      moves += tr.snapshots[s][j].marker != tr.snapshots[s - 1][j].marker;
    }
    const auto fiber = std::count(tr.assignment.begin(), tr.assignment.end(), j);
    EXPECT_LE(moves, static_cast<std::size_t>(fiber));
  }
}

}  // namespace

TEST(CandidateProgram, MonotoneConvergence) {
  CandidateProgram p(prog(ProgramSpec::Kind::parity, 3));
  EXPECT_FALSE(p.eval(5, 0, 2));
  EXPECT_EQ(p.eval(5, 0, 3), 1);
  EXPECT_EQ(p.eval(5, 0, 10), 1);
  EXPECT_FALSE(CandidateProgram(prog(ProgramSpec::Kind::never)).eval(0, 0, 1000));
  ProgramSpec t = prog(ProgramSpec::Kind::table);
  t.table = {{2, 1}};
  t.fallback = 0;
  CandidateProgram tp(t);
  EXPECT_EQ(tp.eval(2, 0, 0), 1);
  EXPECT_EQ(tp.eval(3, 0, 0), 0);
  ProgramSpec th = prog(ProgramSpec::Kind::threshold);
  th.cutoff = 4;
  EXPECT_EQ(CandidateProgram(th).eval(3, 0, 0), 0);
  EXPECT_EQ(CandidateProgram(th).eval(4, 0, 0), 1);
}

TEST(CandidateProgram, KindNames) {
  for (auto k : {ProgramSpec::Kind::const0, ProgramSpec::Kind::const1, ProgramSpec::Kind::never,
                 ProgramSpec::Kind::table, ProgramSpec::Kind::parity, ProgramSpec::Kind::threshold})
    EXPECT_EQ(program_kind(to_string(k)), k);
  EXPECT_CODE(program_kind("sometimes"), ParseError);
}

TEST(Diagonalization, GrowthOnly) {
  const auto run = run_diagonalization(1, {}, {}, 3);
  ASSERT_EQ(run.instances.size(), 1u);
  const auto& inst = run.instances[0];
  // the initial marker plus two elements per stage
  EXPECT_EQ(inst.size(), 7u);
  EXPECT_EQ(inst.lower.size(), 3u);
  EXPECT_EQ(inst.upper.size(), 3u);
  for (auto i : inst.lower)
    for (auto f : inst.upper) EXPECT_TRUE(inst.order.before(i, f));
  expect_transcript_invariants(run, 3);
}

TEST(Diagonalization, ConstantZero) {
  const std::vector<ProgramSpec> ps = {prog(ProgramSpec::Kind::const0)};
  const auto run = run_diagonalization(1, {0}, ps, 4);
  const auto v = check_requirements(run.instances, run.transcript, ps, 4);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_TRUE(v[0].clause == 2 || v[0].clause == 4);
  EXPECT_EQ(v[0].clause, 2);
  EXPECT_TRUE(std::binary_search(run.instances[0].lower.begin(), run.instances[0].lower.end(), v[0].x));
  expect_transcript_invariants(run, 4);
}

TEST(Diagonalization, ConstantOne) {
  const std::vector<ProgramSpec> ps = {prog(ProgramSpec::Kind::const1)};
  const auto run = run_diagonalization(1, {0}, ps, 4);
  const auto v = check_requirements(run.instances, run.transcript, ps, 4);
  EXPECT_EQ(v[0].clause, 3);
  EXPECT_TRUE(std::binary_search(run.instances[0].upper.begin(), run.instances[0].upper.end(), v[0].x));
}

TEST(Diagonalization, NeverConverges) {
  const std::vector<ProgramSpec> ps = {prog(ProgramSpec::Kind::never)};
  const auto run = run_diagonalization(1, {0}, ps, 5);
  const auto v = check_requirements(run.instances, run.transcript, ps, 5);
  EXPECT_FALSE(v[0].defeated());
  EXPECT_TRUE(v[0].unresolved);
  EXPECT_EQ(v[0].describe(), "unresolved within budget");
  for (const auto& a : run.transcript.actions) EXPECT_EQ(a.kind, StageAction::Kind::grow);
}

TEST(Diagonalization, CopyOfMinimalSeparatorIsDefeated) {
  const std::vector<ProgramSpec> base = {prog(ProgramSpec::Kind::const0), prog(ProgramSpec::Kind::never)};
  const std::size_t S = 2 * base.size() + 2;
  const auto ps = materialize_copies(1, {0, 0}, base, {false, true}, S);
  EXPECT_EQ(ps[1].kind, ProgramSpec::Kind::table);
  const auto run = run_diagonalization(1, {0, 0}, ps, S);
  const auto v = check_requirements(run.instances, run.transcript, ps, S);
  for (const auto& verdict : v) EXPECT_TRUE(verdict.defeated()) << verdict.describe();
  // the copied table really is the minimal separator of the first run
  const auto first = run_diagonalization(1, {0, 0}, {base[0], prog(ProgramSpec::Kind::never)}, S);
  const auto B = ls(first.instances[0]);
  for (std::size_t x = 0; x < first.instances[0].size(); ++x)
    EXPECT_EQ(ps[1].table.at(x), std::binary_search(B.begin(), B.end(), x) ? 1 : 0);
}

TEST(Diagonalization, DelayedPrograms) {
  const std::vector<ProgramSpec> ps = {prog(ProgramSpec::Kind::const1, 3), prog(ProgramSpec::Kind::parity, 5),
                                       prog(ProgramSpec::Kind::const0, 1)};
  const std::vector<std::size_t> f = {0, 1, 0};
  const std::size_t S = 2 * ps.size() + 5;
  const auto run = run_diagonalization(2, f, ps, S);
  expect_transcript_invariants(run, S);
  for (const auto& v : check_requirements(run.instances, run.transcript, ps, S)) EXPECT_TRUE(v.defeated());
}

TEST(Diagonalization, LogFormat) {
  const std::vector<ProgramSpec> ps = {prog(ProgramSpec::Kind::const0), prog(ProgramSpec::Kind::const1)};
  const auto run = run_diagonalization(2, {0, 1}, ps, 4);
  const std::regex line(R"(stage=\d+ j=\d+ action=(grow|act0|act1) e=(\d+|-) z=\d+ w=\d+)");
  std::istringstream in(run.transcript.log());
  std::string l;
  std::size_t count = 0;
  while (std::getline(in, l)) {
    EXPECT_TRUE(std::regex_match(l, line)) << l;
    ++count;
  }
  EXPECT_EQ(count, 8u);
  EXPECT_EQ(run.transcript.log(), run_diagonalization(2, {0, 1}, ps, 4).transcript.log());
}

TEST(Diagonalization, Errors) {
  EXPECT_CODE(run_diagonalization(0, {}, {}, 1), BadArity);
  EXPECT_CODE(run_diagonalization(1, {1}, {prog(ProgramSpec::Kind::const0)}, 1), BadArity);
  EXPECT_CODE(run_diagonalization(1, {0, 0}, {prog(ProgramSpec::Kind::const0)}, 1), SizeMismatch);
  const std::vector<ProgramSpec> ps = {prog(ProgramSpec::Kind::const0)};
  const auto run = run_diagonalization(1, {0}, ps, 3);
  EXPECT_CODE(check_requirements({}, run.transcript, ps, 3), MismatchedInputs);
  EXPECT_CODE(check_requirements(run.instances, run.transcript, {}, 3), MismatchedInputs);
  auto other = run_diagonalization(1, {0}, ps, 4).instances;
  EXPECT_CODE(check_requirements(other, run.transcript, ps, 3), MismatchedInputs);
}

TEST(Diagonalization, RandomConfigurations) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 100; ++t) {
    const std::size_t k = 1 + rng() % 4;
    const std::size_t count = 1 + rng() % 8;
    std::vector<ProgramSpec> ps;
    std::vector<std::size_t> f;
    std::vector<bool> copies;
    std::size_t max_delay = 0;
    for (std::size_t e = 0; e < count; ++e) {
      ProgramSpec p = prog(static_cast<ProgramSpec::Kind>(rng() % 6), rng() % 4);
      if (p.kind == ProgramSpec::Kind::never) p.kind = ProgramSpec::Kind::const0;
      if (p.kind == ProgramSpec::Kind::threshold) p.cutoff = rng() % 10;
      if (p.kind == ProgramSpec::Kind::table)
        for (std::size_t x = 0; x < 10; ++x) p.table[x] = rng() % 2;
      max_delay = std::max(max_delay, p.delay);
      ps.push_back(p);
      f.push_back(rng() % k);
      copies.push_back(rng() % 4 == 0);
    }
    const std::size_t S = 2 * count + max_delay;
    const auto real = materialize_copies(k, f, ps, copies, S);
    const auto run = run_diagonalization(k, f, real, S);
    expect_transcript_invariants(run, S);
    for (const auto& v : check_requirements(run.instances, run.transcript, real, S)) {
      EXPECT_TRUE(v.defeated()) << "trial " << t;
      EXPECT_FALSE(v.unresolved);
    }
  }
}
