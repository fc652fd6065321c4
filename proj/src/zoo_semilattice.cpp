#include <algorithm>
#include <functional>

#include "tensorloc/zoo.hpp"

namespace tensorloc::zoo {

SemilatticeSpec SemilatticeSpec::chain(int n) {
  SemilatticeSpec s;
  for (int i = 0; i < n; ++i) s.elements.push_back("c" + std::to_string(i));
  s.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) s.leq[i][j] = true;
  return s;
}

SemilatticeSpec SemilatticeSpec::powerset(int n_atoms) {
  SemilatticeSpec s;
  const int n = 1 << n_atoms;
  for (int i = 0; i < n; ++i) {
    std::string name = "s";
    for (int b = 0; b < n_atoms; ++b) name += (i >> b) & 1 ? '1' : '0';
    s.elements.push_back(name);
  }
  s.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.leq[i][j] = (i & j) == i;
  return s;
}

SmcCategory build_semilattice_category(const SemilatticeSpec& spec) {
  auto table = spec.table();
  if (!table)
    throw MalformedTable("spec is not a meet-semilattice with top");
  const int n = spec.size();
  SmcCategory out;
  FinCategory& c = *out.cat;
  for (int i = 0; i < n; ++i) c.add_object(spec.elements[i]);
  std::vector<std::vector<Mor>> m(n, std::vector<Mor>(n, kNoMor));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (spec.leq[i][j])
        m[i][j] = c.add_morphism("le_" + spec.elements[i] + "_" + spec.elements[j],
                                 i, j);
  for (int i = 0; i < n; ++i) c.set_identity(i, m[i][i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (spec.leq[i][j] && spec.leq[j][k]) c.set_compose(m[j][k], m[i][j], m[i][k]);
  c.finalize();

  out.smc = SmcStructure(out.cat.get());
  out.smc.set_unit(table->top);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.smc.set_tensor_obj(i, j, table->meet[i][j]);
  for (Mor f = 0; f < c.morphism_count(); ++f)
    for (Mor g = 0; g < c.morphism_count(); ++g) {
      int d = table->meet[c.dom(f)][c.dom(g)];
      int cc = table->meet[c.cod(f)][c.cod(g)];
      out.smc.set_tensor_mor(f, g, m[d][cc]);
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int ij = table->meet[i][j];
      out.smc.set_symmetry(i, j, m[ij][ij]);
    }
  return out;
}

std::unique_ptr<FinCategory> build_poset_category(const SemilatticeSpec& spec) {
  const int n = spec.size();
  auto cat = std::make_unique<FinCategory>();
  FinCategory& c = *cat;
  for (int i = 0; i < n; ++i) c.add_object(spec.elements[i]);
  std::vector<std::vector<Mor>> m(n, std::vector<Mor>(n, kNoMor));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (spec.leq[i][j])
        m[i][j] = c.add_morphism("le_" + spec.elements[i] + "_" + spec.elements[j],
                                 i, j);
  for (int i = 0; i < n; ++i) c.set_identity(i, m[i][i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (spec.leq[i][j] && spec.leq[j][k])
          c.set_compose(m[j][k], m[i][j], m[i][k]);
  c.finalize();
  return cat;
}

MonadData build_closure_monad(const SmcCategory& lcat, const SemilatticeSpec& spec,
                              const std::vector<int>& closure) {
  const int n = spec.size();
  if (static_cast<int>(closure.size()) != n)
    throw InvalidClosure("closure table has wrong length");
  for (int i = 0; i < n; ++i) {
    if (closure[i] < 0 || closure[i] >= n)
      throw InvalidClosure("closure table references unknown element");
    if (!spec.leq[i][closure[i]])
      throw InvalidClosure("closure is not inflationary at " + spec.elements[i]);
    if (closure[closure[i]] != closure[i])
      throw InvalidClosure("closure is not idempotent at " + spec.elements[i]);
    for (int j = 0; j < n; ++j)
      if (spec.leq[i][j] && !spec.leq[closure[i]][closure[j]])
        throw InvalidClosure("closure is not monotone at (" + spec.elements[i] +
                             ", " + spec.elements[j] + ")");
  }
  const FinCategory& c = lcat.category();
  MonadData m(&c);
  for (Obj a = 0; a < n; ++a) m.carrier.map_object(a, closure[a]);
  for (Mor f = 0; f < c.morphism_count(); ++f) {
    int ci = closure[c.dom(f)], cj = closure[c.cod(f)];
    m.carrier.map_morphism(f, c.hom(ci, cj).at(0));
  }
  for (Obj a = 0; a < n; ++a) {
    m.unit[a] = c.hom(a, closure[a]).at(0);
    m.mult[a] = c.identity(closure[a]);
  }
  return m;
}

namespace {

// All posets on n labeled points where i ≤ j implies i <= j numerically:
// every iso class of posets appears (via a linear extension).
void enumerate_posets(int n, const std::function<void(
                          const std::vector<std::vector<bool>>&)>& emit) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  const int bits = static_cast<int>(pairs.size());
  for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) leq[i][i] = true;
    for (int b = 0; b < bits; ++b)
      if (mask & (1u << b)) leq[pairs[b].first][pairs[b].second] = true;
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = 0; j < n && transitive; ++j)
        for (int k = 0; k < n && transitive; ++k)
          if (leq[i][j] && leq[j][k] && !leq[i][k]) transitive = false;
    if (transitive) emit(leq);
  }
}

SemilatticeSpec make_spec(const std::vector<std::vector<bool>>& leq) {
  SemilatticeSpec s;
  const int n = static_cast<int>(leq.size());
  for (int i = 0; i < n; ++i) s.elements.push_back("e" + std::to_string(i));
  s.leq = leq;
  return s;
}

}  // namespace

std::vector<SemilatticeSpec> all_semilattices(int max_size) {
  std::vector<SemilatticeSpec> out;
  for (int n = 1; n <= max_size; ++n)
    enumerate_posets(n, [&](const std::vector<std::vector<bool>>& leq) {
      if (SemilatticeTable::from_leq(n, leq)) out.push_back(make_spec(leq));
    });
  return out;
}

std::vector<SemilatticeSpec> all_join_semilattices(int max_size) {
  std::vector<SemilatticeSpec> out;
  for (int n = 1; n <= max_size; ++n)
    enumerate_posets(n, [&](const std::vector<std::vector<bool>>& leq) {
      // dual order must be a meet-semilattice with top
      std::vector<std::vector<bool>> dual(n, std::vector<bool>(n, false));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dual[i][j] = leq[j][i];
      if (SemilatticeTable::from_leq(n, dual)) out.push_back(make_spec(leq));
    });
  return out;
}

std::vector<std::vector<int>> all_closure_operators(const SemilatticeSpec& spec) {
  const int n = spec.size();
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!spec.leq[i][cur[i]]) ok = false;             // inflationary
      else if (cur[cur[i]] != cur[i]) ok = false;       // idempotent
    }
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (spec.leq[i][j] && !spec.leq[cur[i]][cur[j]]) ok = false;
    if (ok) out.push_back(cur);
    int pos = n - 1;
    while (pos >= 0 && cur[pos] == n - 1) cur[pos--] = 0;
    if (pos < 0) break;
    cur[pos]++;
  }
  return out;
}

std::optional<std::pair<int, int>> closure_criterion_violation(
    const SemilatticeSpec& spec, const std::vector<int>& closure) {
  auto table = spec.table();
  if (!table) throw MalformedTable("not a semilattice");
  const int n = spec.size();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int lhs = table->meet[closure[u]][v];
      int rhs = closure[table->meet[u][v]];
      if (!spec.leq[lhs][rhs]) return std::make_pair(u, v);
    }
  return std::nullopt;
}

}  // namespace tensorloc::zoo
