#include <cstdio>
#include <cstdlib>
#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <tuple>
#include <unordered_map>

#include "tensorloc/zoo.hpp"

namespace tensorloc::zoo {

namespace {

using I64 = std::int64_t;
using Table = std::vector<std::int32_t>;  // one coordinate's function table
using Coords = std::vector<Table>;        // one table per coordinate

constexpr std::size_t kMorphismCap = 500000;

// Per-coordinate monad operations on skeletal finite sets.
struct SetMonadOps {
  std::function<I64(I64)> t_card;
  std::function<I64(I64 x, I64 e)> eta;  // X elem -> T(X) elem
  std::function<I64(I64 x, I64 e)> mu;   // T²(X) elem -> T(X) elem
  std::function<I64(I64 x, I64 y, const Table& f, I64 e)> t_apply;
};

SetMonadOps state_ops(I64 s) {
  SetMonadOps ops;
  // T(X) = S ⊸ (X×S): functions [s] -> [x·s], little-endian digits base x·s
  ops.t_card = [s](I64 x) {
    if (x < 0 || x > 100000000) return I64{-1};
    I64 m = x * s, r = 1;
    for (I64 k = 0; k < s; ++k) {
      if (r > 0 && m > 0 && r > (I64{1} << 62) / m) return I64{-1};
      r *= m;
    }
    return r;
  };
  ops.eta = [s](I64 x, I64 e) {
    I64 m = x * s, r = 0, pw = 1;
    for (I64 k = 0; k < s; ++k) {
      r += (e * s + k) * pw;
      pw *= m;
    }
    return r;
  };
  auto t_card = ops.t_card;
  ops.mu = [s, t_card](I64 x, I64 e) {
    // digits of e are pairs (g, t) in T(X)×S; result(k) = digit t of g
    I64 tx = t_card(x);
    I64 m2 = tx * s, m = x * s;
    I64 r = 0, pw = 1;
    for (I64 k = 0; k < s; ++k) {
      I64 d = e % m2;
      e /= m2;
      I64 g = d / s, t = d % s;
      for (I64 j = 0; j < t; ++j) g /= m;
      r += (g % m) * pw;
      pw *= m;
    }
    return r;
  };
  ops.t_apply = [s](I64 x, I64 y, const Table& f, I64 e) {
    I64 mx = x * s, my = y * s;
    I64 r = 0, pw = 1;
    for (I64 k = 0; k < s; ++k) {
      I64 d = e % mx;
      e /= mx;
      I64 a = d / s, t = d % s;
      r += (static_cast<I64>(f[static_cast<std::size_t>(a)]) * s + t) * pw;
      pw *= my;
    }
    return r;
  };
  return ops;
}

SetMonadOps powerset_ops(bool nonempty) {
  SetMonadOps ops;
  const I64 off = nonempty ? 1 : 0;  // element index = bitmask - off
  ops.t_card = [off](I64 x) {
    if (x >= 62 || x < 0) return I64{-1};
    return (I64{1} << x) - off;
  };
  ops.eta = [off](I64, I64 e) { return (I64{1} << e) - off; };
  ops.mu = [off](I64, I64 e) {
    I64 outer = e + off;
    I64 r = 0;
    for (I64 bit = 0; outer; ++bit, outer >>= 1)
      if (outer & 1) r |= bit + off;
    return r - off;
  };
  ops.t_apply = [off](I64 x, I64, const Table& f, I64 e) {
    I64 mask = e + off, r = 0;
    for (I64 bit = 0; bit < x; ++bit)
      if (mask & (I64{1} << bit)) r |= I64{1} << f[static_cast<std::size_t>(bit)];
    return r - off;
  };
  return ops;
}

struct PendingMor {
  Obj dom, cod;
  Coords coords;
  std::string name;
};

class TupleWorld {
 public:
  int n;
  std::vector<Card> cards;
  std::map<Card, Obj> obj_idx;
  std::vector<PendingMor> mors;
  std::unordered_map<std::uint64_t, std::vector<Mor>> content_idx;
  std::vector<std::vector<Mor>> out_of, in_to;
  std::vector<Mor> ids;
  std::vector<std::array<Mor, 3>> compose_entries;
  std::vector<std::array<Mor, 3>> tensor_entries;
  std::vector<std::tuple<Obj, Obj, Mor>> symmetry_entries;

  explicit TupleWorld(int n_) : n(n_) {}

  Obj intern_obj(const Card& c) {
    auto it = obj_idx.find(c);
    if (it != obj_idx.end()) return it->second;
    Obj o = static_cast<Obj>(cards.size());
    cards.push_back(c);
    obj_idx.emplace(c, o);
    out_of.emplace_back();
    in_to.emplace_back();
    ids.push_back(kNoMor);
    Coords id_coords(n);
    for (int i = 0; i < n; ++i) {
      id_coords[i].resize(static_cast<std::size_t>(c[i]));
      for (std::size_t e = 0; e < id_coords[i].size(); ++e)
        id_coords[i][e] = static_cast<std::int32_t>(e);
    }
    ids[o] = intern_mor(o, o, std::move(id_coords), "id");
    return o;
  }

  Obj find_obj(const Card& c) const {
    auto it = obj_idx.find(c);
    return it == obj_idx.end() ? kNoObj : it->second;
  }

  static std::uint64_t hash_content(Obj d, Obj c, const Coords& m) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(d));
    mix(static_cast<std::uint64_t>(c));
    for (const auto& t : m) {
      mix(t.size());
      for (auto v : t) mix(static_cast<std::uint64_t>(v));
    }
    return h;
  }

  Mor find_mor(Obj d, Obj c, const Coords& m) const {
    auto it = content_idx.find(hash_content(d, c, m));
    if (it == content_idx.end()) return kNoMor;
    for (Mor f : it->second)
      if (mors[f].dom == d && mors[f].cod == c && mors[f].coords == m) return f;
    return kNoMor;
  }

  Mor intern_mor(Obj d, Obj c, Coords&& m, const std::string& hint) {
    std::uint64_t h = hash_content(d, c, m);
    auto& bucket = content_idx[h];
    for (Mor f : bucket)
      if (mors[f].dom == d && mors[f].cod == c && mors[f].coords == m) return f;
    if (mors.size() >= kMorphismCap)
      throw SizeLimit("tuple fragment exceeded the morphism cap");
    Mor f = static_cast<Mor>(mors.size());
    mors.push_back({d, c, std::move(m), hint + "_" + std::to_string(f)});
    bucket.push_back(f);
    out_of[d].push_back(f);
    in_to[c].push_back(f);
    return f;
  }

  Coords compose_coords(const PendingMor& g, const PendingMor& f) const {
    Coords r(n);
    for (int i = 0; i < n; ++i) {
      r[i].resize(f.coords[i].size());
      for (std::size_t e = 0; e < r[i].size(); ++e)
        r[i][e] = g.coords[i][static_cast<std::size_t>(f.coords[i][e])];
    }
    return r;
  }

  void close_composition() {
    std::size_t done = next_compose_;
    while (done < mors.size()) {
      Mor f = static_cast<Mor>(done++);
      Obj fc = mors[f].cod, fd = mors[f].dom;
      std::vector<Mor> outs = out_of[fc];
      for (Mor g : outs) {
        Coords comp = compose_coords(mors[g], mors[f]);
        Mor gf = intern_mor(fd, mors[g].cod, std::move(comp), "c");
        compose_entries.push_back({g, f, gf});
      }
      std::vector<Mor> ins = in_to[fd];
      for (Mor g : ins) {
        if (g >= f) continue;  // covered when the newer one is processed
        Coords comp = compose_coords(mors[f], mors[g]);
        Mor fg = intern_mor(mors[g].dom, fc, std::move(comp), "c");
        compose_entries.push_back({f, g, fg});
      }
    }
    next_compose_ = done;
  }

  Card tensor_card(const Card& a, const Card& b) const {
    Card r(n);
    for (int i = 0; i < n; ++i) r[i] = a[i] * b[i];
    return r;
  }

  Coords tensor_coords(const PendingMor& f, const PendingMor& g) const {
    Coords r(n);
    const Card& fd = cards[f.dom];
    const Card& gd = cards[g.dom];
    const Card& gc = cards[g.cod];
    for (int i = 0; i < n; ++i) {
      r[i].resize(static_cast<std::size_t>(fd[i] * gd[i]));
      for (I64 a = 0; a < fd[i]; ++a)
        for (I64 b = 0; b < gd[i]; ++b)
          r[i][static_cast<std::size_t>(a * gd[i] + b)] =
              static_cast<std::int32_t>(
                  static_cast<I64>(f.coords[i][static_cast<std::size_t>(a)]) *
                      gc[i] +
                  g.coords[i][static_cast<std::size_t>(b)]);
    }
    return r;
  }

  void try_tensor(Mor f, Mor g) {
    Obj d = find_obj(tensor_card(cards[mors[f].dom], cards[mors[g].dom]));
    Obj c = find_obj(tensor_card(cards[mors[f].cod], cards[mors[g].cod]));
    if (d == kNoObj || c == kNoObj) return;
    Mor t = intern_mor(d, c, tensor_coords(mors[f], mors[g]), "t");
    tensor_entries.push_back({f, g, t});
  }

  bool is_subterminal(Obj o) const {
    for (int i = 0; i < n; ++i)
      if (cards[o][i] > 1) return false;
    return true;
  }

  // Symmetries generate large permutation groups under composition closure,
  // so monad fragments only materialize the pairs the central-idempotent
  // machinery uses: those with a subterminal factor (identity tables).
  void add_symmetries(bool subterminal_factor_only) {
    for (Obj a = 0; a < static_cast<Obj>(cards.size()); ++a)
      for (Obj b = 0; b < static_cast<Obj>(cards.size()); ++b) {
        if (subterminal_factor_only && !is_subterminal(a) && !is_subterminal(b))
          continue;
        Obj ab = find_obj(tensor_card(cards[a], cards[b]));
        Obj ba = find_obj(tensor_card(cards[b], cards[a]));
        if (ab == kNoObj || ba == kNoObj) continue;
        Coords sw(n);
        for (int i = 0; i < n; ++i) {
          I64 xa = cards[a][i], xb = cards[b][i];
          sw[i].resize(static_cast<std::size_t>(xa * xb));
          for (I64 p = 0; p < xa; ++p)
            for (I64 q = 0; q < xb; ++q)
              sw[i][static_cast<std::size_t>(p * xb + q)] =
                  static_cast<std::int32_t>(q * xa + p);
        }
        Mor s = intern_mor(ab, ba, std::move(sw), "sw");
        symmetry_entries.push_back({a, b, s});
      }
  }

  void add_full_homs(Obj a, Obj b) {
    const Card& ca = cards[a];
    const Card& cb = cards[b];
    std::vector<Table> current(n);
    I64 total = 1;
    for (int i = 0; i < n; ++i) {
      current[i].assign(static_cast<std::size_t>(ca[i]), 0);
      I64 cnt = 1;
      for (I64 k = 0; k < ca[i]; ++k) cnt *= cb[i];
      total *= cnt;
    }
    if (total == 0) return;
    while (true) {
      Coords copy = current;
      intern_mor(a, b, std::move(copy), "f");
      int i = 0;
      for (; i < n; ++i) {
        bool carried = true;
        for (std::size_t pos = 0; pos < current[i].size(); ++pos) {
          if (current[i][pos] + 1 < cb[i]) {
            current[i][pos]++;
            std::fill(current[i].begin(),
                      current[i].begin() + static_cast<std::ptrdiff_t>(pos), 0);
            carried = false;
            break;
          }
        }
        if (!carried) break;
        std::fill(current[i].begin(), current[i].end(), 0);
      }
      if (i == n) break;
    }
  }

  SmcCategory materialize(bool fragment) {
    SmcCategory out;
    FinCategory& cat = *out.cat;
    for (Obj o = 0; o < static_cast<Obj>(cards.size()); ++o) {
      std::string name;
      for (int i = 0; i < n; ++i) {
        if (i) name += "x";
        name += std::to_string(cards[o][i]);
      }
      cat.add_object(name);
    }
    for (const auto& m : mors) cat.add_morphism(m.name, m.dom, m.cod);
    for (Obj o = 0; o < static_cast<Obj>(cards.size()); ++o)
      cat.set_identity(o, ids[o]);
    for (const auto& [g, f, gf] : compose_entries) cat.set_compose(g, f, gf);
    if (fragment) cat.mark_fragment();
    cat.finalize();

    out.smc = SmcStructure(out.cat.get());
    Card unit(static_cast<std::size_t>(n), 1);
    Obj unit_obj = find_obj(unit);
    if (unit_obj == kNoObj) throw MalformedTable("tensor unit not interned");
    out.smc.set_unit(unit_obj);
    for (Obj a = 0; a < static_cast<Obj>(cards.size()); ++a)
      for (Obj b = 0; b < static_cast<Obj>(cards.size()); ++b) {
        Obj ab = find_obj(tensor_card(cards[a], cards[b]));
        if (ab != kNoObj) out.smc.set_tensor_obj(a, b, ab);
      }
    for (const auto& [f, g, fg] : tensor_entries) out.smc.set_tensor_mor(f, g, fg);
    for (const auto& [a, b, s] : symmetry_entries) out.smc.set_symmetry(a, b, s);
    return out;
  }

 private:
  std::size_t next_compose_ = 0;
};

void zero_closure(TupleWorld& w) {
  std::size_t count = w.cards.size();
  for (std::size_t o = 0; o < count; ++o) {
    Card base = w.cards[o];
    for (std::uint32_t mask = 1; mask < (1u << w.n); ++mask) {
      Card z = base;
      for (int i = 0; i < w.n; ++i)
        if (mask & (1u << i)) z[i] = 0;
      w.intern_obj(z);
    }
  }
}

std::vector<Mor> small_morphisms(const TupleWorld& w) {
  std::vector<Mor> smalls;
  auto subterminal = [&](Obj o) {
    for (int i = 0; i < w.n; ++i)
      if (w.cards[o][i] > 1) return false;
    return true;
  };
  for (Mor f = 0; f < static_cast<Mor>(w.mors.size()); ++f)
    if (subterminal(w.mors[f].dom) && subterminal(w.mors[f].cod))
      smalls.push_back(f);
  return smalls;
}

// fixpoint: composition closure, tensors against subterminal morphisms, and
// application of the monad functor where endpoints are interned
void saturate(TupleWorld& w, const std::vector<SetMonadOps>* ops,
              std::map<Mor, Mor>* t_of_mor) {
  std::unordered_map<std::uint64_t, bool> tensor_done;
  auto key = [](Mor a, Mor b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  };
  bool changed = true;
  while (changed) {
    std::size_t before = w.mors.size();
    w.close_composition();
    if (std::getenv("TENSORLOC_DEBUG_SATURATE"))
      std::fprintf(stderr, "after compose: %zu\n", w.mors.size());
    std::vector<Mor> smalls = small_morphisms(w);
    for (Mor f = 0; f < static_cast<Mor>(w.mors.size()); ++f)
      for (Mor g : smalls) {
        if (tensor_done.emplace(key(f, g), true).second) w.try_tensor(f, g);
        if (tensor_done.emplace(key(g, f), true).second) w.try_tensor(g, f);
      }
    if (ops && t_of_mor) {
      std::size_t snapshot = w.mors.size();
      for (Mor f = 0; f < static_cast<Mor>(snapshot); ++f) {
        if (t_of_mor->count(f)) continue;
        const auto& pm = w.mors[f];
        Card td(static_cast<std::size_t>(w.n)), tc(static_cast<std::size_t>(w.n));
        for (int i = 0; i < w.n; ++i) {
          td[i] = (*ops)[i].t_card(w.cards[pm.dom][i]);
          tc[i] = (*ops)[i].t_card(w.cards[pm.cod][i]);
        }
        Obj tdo = w.find_obj(td), tco = w.find_obj(tc);
        if (tdo == kNoObj || tco == kNoObj) continue;
        Coords coords(static_cast<std::size_t>(w.n));
        for (int i = 0; i < w.n; ++i) {
          coords[i].resize(static_cast<std::size_t>(td[i]));
          for (I64 e = 0; e < td[i]; ++e)
            coords[i][static_cast<std::size_t>(e)] =
                static_cast<std::int32_t>((*ops)[i].t_apply(
                    w.cards[pm.dom][i], w.cards[pm.cod][i], pm.coords[i], e));
        }
        (*t_of_mor)[f] = w.intern_mor(tdo, tco, std::move(coords), "T");
      }
    }
    changed = w.mors.size() != before;
  }
}

std::vector<Card> cube(int n, int cap) {
  std::vector<Card> out;
  Card cur(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(cur);
    int i = 0;
    while (i < n && cur[i] == cap) cur[i++] = 0;
    if (i == n) break;
    cur[i]++;
  }
  return out;
}

}  // namespace

TupleInstance build_tuple_category(int n, int carrier_cap) {
  TupleInstance inst;
  inst.n = n;
  TupleWorld w(n);
  for (const auto& c : cube(n, carrier_cap)) w.intern_obj(c);
  const Obj num_objects = static_cast<Obj>(w.cards.size());
  for (Obj a = 0; a < num_objects; ++a)
    for (Obj b = 0; b < num_objects; ++b) w.add_full_homs(a, b);
  w.close_composition();
  w.add_symmetries(false);
  // tensor entries wherever the endpoint products stay inside the fragment
  const Obj objs = static_cast<Obj>(w.cards.size());
  std::vector<std::vector<Obj>> prod(objs, std::vector<Obj>(objs));
  for (Obj a = 0; a < objs; ++a)
    for (Obj b = 0; b < objs; ++b)
      prod[a][b] = w.find_obj(w.tensor_card(w.cards[a], w.cards[b]));
  std::size_t base_count = w.mors.size();
  for (Mor f = 0; f < static_cast<Mor>(base_count); ++f)
    for (Mor g = 0; g < static_cast<Mor>(base_count); ++g) {
      const auto& pf = w.mors[f];
      const auto& pg = w.mors[g];
      if (prod[pf.dom][pg.dom] == kNoObj || prod[pf.cod][pg.cod] == kNoObj)
        continue;
      w.try_tensor(f, g);
    }
  w.close_composition();
  inst.bundle = w.materialize(true);
  inst.cards = w.cards;
  inst.obj_of_card = w.obj_idx;
  return inst;
}

namespace {

void deep_set_monad_laws(const std::vector<SetMonadOps>& ops,
                         const std::vector<Card>& core, int n,
                         ValidationReport& rep, I64 size_limit) {
  for (const auto& a : core) {
    for (int i = 0; i < n; ++i) {
      I64 x = a[i];
      I64 tx = ops[i].t_card(x);
      I64 t2x = ops[i].t_card(tx);
      I64 t3x = ops[i].t_card(t2x);
      if (t3x > size_limit || t3x < 0) {
        rep.skip("deep/assoc");
        rep.skip("deep/unit");
        continue;
      }
      Table mu_x(static_cast<std::size_t>(t2x));
      for (I64 e = 0; e < t2x; ++e)
        mu_x[static_cast<std::size_t>(e)] =
            static_cast<std::int32_t>(ops[i].mu(x, e));
      bool ok = true;
      for (I64 e = 0; e < t3x && ok; ++e) {
        I64 via_mu_t =
            mu_x[static_cast<std::size_t>(ops[i].mu(tx, e))];
        I64 tmu = ops[i].t_apply(t2x, tx, mu_x, e);
        I64 via_t_mu = mu_x[static_cast<std::size_t>(tmu)];
        if (via_mu_t != via_t_mu) ok = false;
      }
      ok ? rep.pass("deep/assoc")
         : rep.fail("deep/assoc", "μ∘μT ≠ μ∘Tμ at coordinate " +
                                      std::to_string(i) + " size " +
                                      std::to_string(x));
      for (I64 y : {x, tx}) {
        I64 ty = ops[i].t_card(y);
        I64 t2y = ops[i].t_card(ty);
        if (t2y > size_limit) {
          rep.skip("deep/unit");
          continue;
        }
        Table mu_y(static_cast<std::size_t>(t2y));
        for (I64 e = 0; e < t2y; ++e)
          mu_y[static_cast<std::size_t>(e)] =
              static_cast<std::int32_t>(ops[i].mu(y, e));
        Table eta_y(static_cast<std::size_t>(y));
        for (I64 e = 0; e < y; ++e)
          eta_y[static_cast<std::size_t>(e)] =
              static_cast<std::int32_t>(ops[i].eta(y, e));
        bool u_ok = true;
        for (I64 e = 0; e < ty && u_ok; ++e) {
          if (mu_y[static_cast<std::size_t>(ops[i].eta(ty, e))] != e)
            u_ok = false;
          I64 teta = ops[i].t_apply(y, ty, eta_y, e);
          if (mu_y[static_cast<std::size_t>(teta)] != e) u_ok = false;
        }
        u_ok ? rep.pass("deep/unit")
             : rep.fail("deep/unit", "unit law fails at coordinate " +
                                         std::to_string(i) + " size " +
                                         std::to_string(y));
      }
    }
  }
}

struct MonadFragment {
  TupleInstance world;
  MonadData monad;
  StrengthFamily strength;
  ZiSemilattice zi;
  std::map<Obj, Obj> exp_obj;
  std::map<Obj, Mor> eval_mor;
};

MonadFragment build_set_monad_fragment(int n, const std::vector<SetMonadOps>& ops,
                                       int carrier_cap, int depth,
                                       bool with_exponentials, const Card& state) {
  TupleWorld w(n);
  std::vector<Card> core = cube(n, carrier_cap);
  for (const auto& c : core) w.intern_obj(c);
  auto t_card_of = [&](const Card& c) {
    Card t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) t[i] = ops[i].t_card(c[i]);
    return t;
  };
  for (const auto& c : core) {
    Card t = c;
    for (int d = 0; d < depth; ++d) {
      if (!state.empty()) w.intern_obj(w.tensor_card(t, state));
      t = t_card_of(t);
      w.intern_obj(t);
    }
  }
  zero_closure(w);

  std::vector<Obj> core_objs;
  for (const auto& c : core) core_objs.push_back(w.find_obj(c));
  for (Obj a : core_objs)
    for (Obj b : core_objs) w.add_full_homs(a, b);

  std::map<Obj, Mor> eta_of, mu_of;
  const Obj obj_count_now = static_cast<Obj>(w.cards.size());
  for (Obj o = 0; o < obj_count_now; ++o) {
    Card t = t_card_of(w.cards[o]);
    Obj to = w.find_obj(t);
    if (to == kNoObj) continue;
    {
      Coords eta(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        eta[i].resize(static_cast<std::size_t>(w.cards[o][i]));
        for (I64 e = 0; e < w.cards[o][i]; ++e)
          eta[i][static_cast<std::size_t>(e)] =
              static_cast<std::int32_t>(ops[i].eta(w.cards[o][i], e));
      }
      eta_of[o] = w.intern_mor(o, to, std::move(eta), "eta");
    }
    Card t2 = t_card_of(t);
    Obj t2o = w.find_obj(t2);
    if (t2o == kNoObj) continue;
    Coords mu(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      mu[i].resize(static_cast<std::size_t>(t2[i]));
      for (I64 e = 0; e < t2[i]; ++e)
        mu[i][static_cast<std::size_t>(e)] =
            static_cast<std::int32_t>(ops[i].mu(w.cards[o][i], e));
    }
    mu_of[o] = w.intern_mor(t2o, to, std::move(mu), "mu");
  }

  // strength entries: T(A)⊗U -> T(A⊗U) for subterminal U; with matching
  // element encodings these are identity tables on nonzero coordinates
  std::map<std::pair<Obj, std::uint32_t>, Mor> str_of;
  for (Obj o = 0; o < obj_count_now; ++o) {
    Card t = t_card_of(w.cards[o]);
    if (w.find_obj(t) == kNoObj) continue;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Card tau(static_cast<std::size_t>(n)), t_au(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        I64 u = (mask & (1u << i)) ? 1 : 0;
        tau[i] = t[i] * u;
        t_au[i] = ops[i].t_card(w.cards[o][i] * u);
      }
      Obj dom = w.find_obj(tau), cod = w.find_obj(t_au);
      if (dom == kNoObj || cod == kNoObj) continue;
      Coords str(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        str[i].resize(static_cast<std::size_t>(tau[i]));
        for (I64 e = 0; e < tau[i]; ++e)
          str[i][static_cast<std::size_t>(e)] = static_cast<std::int32_t>(e);
      }
      str_of[{o, mask}] = w.intern_mor(dom, cod, std::move(str), "str");
    }
  }

  std::map<Obj, Obj> exp_obj;
  std::map<Obj, Mor> eval_mor;
  if (with_exponentials) {
    for (Obj o : core_objs) {
      Card x = w.cards[o];
      Card exp(static_cast<std::size_t>(n)), dom(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        I64 e = 1;
        for (I64 k = 0; k < state[i]; ++k) e *= x[i];
        exp[i] = e;
        dom[i] = e * state[i];
      }
      Obj eo = w.intern_obj(exp);
      Obj doo = w.intern_obj(dom);
      Coords ev(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        ev[i].resize(static_cast<std::size_t>(dom[i]));
        for (I64 h = 0; h < exp[i]; ++h)
          for (I64 k = 0; k < state[i]; ++k) {
            I64 digit = h;
            for (I64 j = 0; j < k; ++j) digit /= x[i];
            ev[i][static_cast<std::size_t>(h * state[i] + k)] =
                static_cast<std::int32_t>(digit % x[i]);
          }
      }
      exp_obj[o] = eo;
      eval_mor[o] = w.intern_mor(doo, o, std::move(ev), "ev");
    }
  }

  w.add_symmetries(true);
  std::map<Mor, Mor> t_of_mor;
  saturate(w, &ops, &t_of_mor);

  MonadFragment frag;
  frag.world.n = n;
  frag.world.bundle = w.materialize(true);
  frag.world.cards = w.cards;
  frag.world.obj_of_card = w.obj_idx;
  frag.exp_obj = exp_obj;
  frag.eval_mor = eval_mor;

  const FinCategory& cat = frag.world.cat();
  MonadData m(&cat);
  for (Obj o = 0; o < cat.object_count(); ++o) {
    Obj to = w.find_obj(t_card_of(w.cards[o]));
    if (to != kNoObj) m.carrier.map_object(o, to);
  }
  for (const auto& [f, tf] : t_of_mor) m.carrier.map_morphism(f, tf);
  for (const auto& [o, e] : eta_of) m.unit[o] = e;
  for (const auto& [o, e] : mu_of) m.mult[o] = e;
  frag.monad = std::move(m);

  frag.zi = zi_semilattice(frag.world.smc());
  frag.strength = StrengthFamily(cat.object_count(), frag.zi.size());
  for (int ui = 0; ui < frag.zi.size(); ++ui) {
    const Card& ucard = w.cards[frag.zi.elements[ui].dom];
    std::uint32_t mask = 0;
    for (int i = 0; i < n; ++i)
      if (ucard[i] == 1) mask |= 1u << i;
    for (Obj o = 0; o < cat.object_count(); ++o) {
      auto it = str_of.find({o, mask});
      if (it != str_of.end()) frag.strength.set(o, ui, it->second);
    }
  }
  return frag;
}

}  // namespace

StateMonadInstance build_state_monad(int n, const Card& state, int carrier_cap) {
  if (static_cast<int>(state.size()) != n)
    throw MalformedTable("state object has wrong arity");
  std::vector<SetMonadOps> ops;
  for (int i = 0; i < n; ++i) ops.push_back(state_ops(state[i]));
  MonadFragment frag =
      build_set_monad_fragment(n, ops, carrier_cap, 2, true, state);
  StateMonadInstance inst;
  inst.world = std::move(frag.world);
  inst.zi = std::move(frag.zi);
  inst.monad = std::move(frag.monad);
  inst.strength = std::move(frag.strength);
  inst.state = state;
  inst.exp_obj = std::move(frag.exp_obj);
  inst.eval_mor = std::move(frag.eval_mor);
  deep_set_monad_laws(ops, cube(n, carrier_cap), n, inst.deep_laws, 8000000);
  return inst;
}

PowersetInstance build_powerset_monad(int base_cap, bool nonempty) {
  std::vector<SetMonadOps> ops{powerset_ops(nonempty)};
  int depth = 3;
  I64 top = base_cap;
  for (int d = 0; d < 3; ++d) top = ops[0].t_card(top);
  if (top > 70000 || top < 0) depth = 2;
  MonadFragment frag =
      build_set_monad_fragment(1, ops, base_cap, depth, false, {});
  PowersetInstance inst;
  inst.world = std::move(frag.world);
  inst.zi = std::move(frag.zi);
  inst.monad = std::move(frag.monad);
  inst.strength = std::move(frag.strength);
  inst.nonempty = nonempty;
  std::vector<Card> core;
  for (I64 k = 0; k <= base_cap; ++k) core.push_back({k});
  deep_set_monad_laws(ops, core, 1, inst.deep_laws, I64{1} << 20);
  return inst;
}

}  // namespace tensorloc::zoo
