#include "thetablocks/groups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "thetablocks/error.hpp"
#include "thetablocks/numtheory.hpp"

namespace thetablocks {
namespace {

std::string cycle_notation(const Perm& p) {
  std::ostringstream out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out << "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      out << (first ? "" : ",") << j;
      first = false;
      j = p[j];
    }
    out << ")";
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

std::vector<bool> closure_mask(const FiniteGroup& G, const std::vector<Elem>& gens) {
  std::vector<bool> in(G.order(), false);
  std::vector<Elem> list{0};
  in[0] = true;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (Elem g : gens) {
      Elem y = G.mul(list[i], g);
      if (!in[y]) {
        in[y] = true;
        list.push_back(y);
      }
    }
  return in;
}

std::vector<Elem> mask_members(const std::vector<bool>& mask) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(static_cast<Elem>(i));
  return out;
}

}  // namespace

std::shared_ptr<const FiniteGroup> FiniteGroup::from_permutations(std::string name, const std::vector<Perm>& generators,
                                                                  std::size_t cap) {
  if (generators.empty()) throw Error(ErrorKind::MalformedInput, "empty generator set");
  std::size_t d = generators.front().size();
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const Perm& g = generators[k];
    if (g.size() != d)
      throw Error(ErrorKind::MalformedPermutation, "generator " + std::to_string(k) + " has a different degree");
    std::vector<bool> hit(d, false);
    for (std::size_t i = 0; i < d; ++i) {
      if (g[i] >= d || hit[g[i]])
        throw Error(ErrorKind::MalformedPermutation,
                    "generator " + std::to_string(k) + " is not a bijection at position " + std::to_string(i));
      hit[g[i]] = true;
    }
  }
  Perm id(d);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<Perm> elems{id};
  std::map<Perm, Elem> index{{id, 0}};
  auto compose = [d](const Perm& x, const Perm& y) {
    Perm r(d);
    for (std::size_t i = 0; i < d; ++i) r[i] = y[x[i]];
    return r;
  };
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const Perm& g : generators) {
      Perm y = compose(elems[i], g);
      if (index.emplace(y, static_cast<Elem>(elems.size())).second) {
        elems.push_back(std::move(y));
        if (elems.size() > cap)
          throw Error(ErrorKind::OrderCapExceeded,
                      "group " + name + " exceeds the order cap " + std::to_string(cap));
      }
    }
  std::size_t n = elems.size();
  auto G = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  G->name_ = std::move(name);
  G->n_ = n;
  G->table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) G->table_[a * n + b] = index.at(compose(elems[a], elems[b]));
  G->origin_ = {GroupOrigin::Kind::Permutations, "generated by " + std::to_string(generators.size()) + " permutations"};
  for (const Perm& p : elems) G->labels_.push_back(cycle_notation(p));
  G->perms_ = std::move(elems);
  std::vector<Elem> gens;
  for (const Perm& g : generators) {
    Elem e = index.at(g);
    if (e != 0 && std::find(gens.begin(), gens.end(), e) == gens.end()) gens.push_back(e);
  }
  G->finish(std::move(gens));
  return G;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_cayley(std::string name, std::vector<std::vector<Elem>> table,
                                                            GroupOrigin origin, std::size_t cap,
                                                            std::vector<std::string> labels) {
  std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::MalformedInput, "empty Cayley table");
  if (n > cap) throw Error(ErrorKind::OrderCapExceeded, "group " + name + " exceeds the order cap " + std::to_string(cap));
  auto G = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  G->name_ = std::move(name);
  G->n_ = n;
  G->table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw Error(ErrorKind::MalformedInput, "Cayley table row " + std::to_string(a) + " has the wrong length");
    std::vector<bool> hit(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      Elem v = table[a][b];
      if (v >= n || hit[v])
        throw Error(ErrorKind::MalformedInput, "Cayley table row " + std::to_string(a) + " is not a permutation (column " +
                                                   std::to_string(b) + ")");
      hit[v] = true;
      G->table_[a * n + b] = v;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<bool> hit(n, false);
    for (std::size_t a = 0; a < n; ++a) {
      Elem v = table[a][b];
      if (hit[v])
        throw Error(ErrorKind::MalformedInput, "Cayley table column " + std::to_string(b) + " is not a permutation (row " +
                                                   std::to_string(a) + ")");
      hit[v] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (table[0][a] != a || table[a][0] != a)
      throw Error(ErrorKind::MalformedInput, "element 0 is not the identity (row/column " + std::to_string(a) + ")");
  if (!labels.empty() && labels.size() != n) throw Error(ErrorKind::MalformedInput, "label count does not match order");
  G->origin_ = std::move(origin);
  G->labels_ = std::move(labels);
  if (!G->check_associativity(n <= 64))
    throw Error(ErrorKind::MalformedInput, "Cayley table of " + G->name_ + " is not associative");
  G->finish({});
  return G;
}

void FiniteGroup::finish(std::vector<Elem> preferred_gens) {
  const std::size_t n = n_;
  inv_.assign(n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }
  orders_.assign(n, 1);
  exponent_ = 1;
  for (Elem a = 0; a < n; ++a) {
    Elem x = a;
    std::uint64_t k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    orders_[a] = k;
    exponent_ = std::lcm(exponent_, k);
  }

  // Generators: the preferred ones, else greedy by index.
  if (preferred_gens.empty()) {
    std::vector<bool> in(n, false);
    in[0] = true;
    for (Elem x = 1; x < n; ++x) {
      if (in[x]) continue;
      preferred_gens.push_back(x);
      in = closure_mask(*this, preferred_gens);
    }
  }
  gens_ = std::move(preferred_gens);

  tree_parent_.assign(n, 0);
  tree_gen_.assign(n, 0);
  bfs_order_ = {0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t i = 0; i < bfs_order_.size(); ++i)
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      Elem y = mul(bfs_order_[i], gens_[k]);
      if (!seen[y]) {
        seen[y] = true;
        tree_parent_[y] = bfs_order_[i];
        tree_gen_[y] = k;
        bfs_order_.push_back(y);
      }
    }
  if (bfs_order_.size() != n) throw Error(ErrorKind::MalformedInput, "generators do not generate the group");

  class_of_.assign(n, static_cast<std::size_t>(-1));
  classes_.clear();
  for (Elem x = 0; x < n; ++x) {
    if (class_of_[x] != static_cast<std::size_t>(-1)) continue;
    std::size_t k = classes_.size();
    ConjClass c;
    c.representative = x;
    c.members = {x};
    class_of_[x] = k;
    for (std::size_t i = 0; i < c.members.size(); ++i)
      for (Elem g : gens_) {
        Elem y = conj(c.members[i], g);
        if (class_of_[y] != k) {
          class_of_[y] = k;
          c.members.push_back(y);
        }
      }
    std::sort(c.members.begin(), c.members.end());
    classes_.push_back(std::move(c));
  }
}

Elem FiniteGroup::pow(Elem x, std::int64_t k) const {
  std::int64_t o = static_cast<std::int64_t>(orders_[x]);
  k = nt::mod(k, o);
  Elem r = 0;
  for (std::int64_t i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

std::string FiniteGroup::label(Elem x) const {
  if (x < labels_.size()) return labels_[x];
  return "g" + std::to_string(x);
}

bool FiniteGroup::check_associativity(bool exhaustive, std::uint64_t seed) const {
  const Elem n = static_cast<Elem>(n_);
  if (exhaustive) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        Elem ab = mul(a, b);
        for (Elem c = 0; c < n; ++c)
          if (mul(ab, c) != mul(a, mul(b, c))) return false;
      }
    return true;
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 20000; ++i) {
    Elem a = static_cast<Elem>(rng() % n), b = static_cast<Elem>(rng() % n), c = static_cast<Elem>(rng() % n);
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  }
  return true;
}

// ----------------------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> members) : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  mask_.assign(parent_->order(), false);
  for (Elem x : members_) mask_[x] = true;
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<Elem> all(parent->order());
  std::iota(all.begin(), all.end(), 0u);
  return Subgroup(parent, std::move(all));
}

long Subgroup::index_of(Elem x) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.end() || *it != x) return -1;
  return it - members_.begin();
}

const std::vector<ConjClass>& conjugacy_classes(const FiniteGroup& G) { return G.classes(); }

Subgroup generated_subgroup(const GroupPtr& G, const std::vector<Elem>& gens) {
  return Subgroup(G, mask_members(closure_mask(*G, gens)));
}

Subgroup centralizer(const GroupPtr& G, Elem x) {
  std::vector<Elem> out;
  for (Elem g = 0; g < G->order(); ++g)
    if (G->mul(g, x) == G->mul(x, g)) out.push_back(g);
  return Subgroup(G, std::move(out));
}

std::vector<Elem> subgroup_generators(const Subgroup& H) {
  const FiniteGroup& G = *H.parent();
  std::vector<Elem> gens;
  std::vector<bool> in(G.order(), false);
  in[0] = true;
  for (Elem x : H.members()) {
    if (in[x]) continue;
    gens.push_back(x);
    in = closure_mask(G, gens);
  }
  return gens;
}

Subgroup normalizer(const GroupPtr& G, const Subgroup& H) {
  auto gens = subgroup_generators(H);
  std::vector<Elem> out;
  for (Elem g = 0; g < G->order(); ++g) {
    bool ok = true;
    for (Elem h : gens)
      if (!H.contains(G->conj(h, g))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return Subgroup(G, std::move(out));
}

Subgroup center(const GroupPtr& G) {
  std::vector<Elem> out;
  for (Elem x = 0; x < G->order(); ++x) {
    bool central = true;
    for (Elem g : G->generators())
      if (G->mul(g, x) != G->mul(x, g)) {
        central = false;
        break;
      }
    if (central) out.push_back(x);
  }
  return Subgroup(G, std::move(out));
}

Subgroup normal_closure(const GroupPtr& G, const std::vector<Elem>& gens) {
  std::vector<bool> in(G->order(), false);
  in[0] = true;
  std::vector<Elem> list{0};
  // Close under multiplication by conjugates of the seeds; conjugation by the
  // group generators keeps the set normal.
  std::vector<Elem> seeds;
  std::vector<bool> seed_in(G->order(), false);
  for (Elem s : gens)
    if (!seed_in[s]) {
      seed_in[s] = true;
      seeds.push_back(s);
    }
  for (std::size_t i = 0; i < seeds.size(); ++i)
    for (Elem g : G->generators()) {
      Elem y = G->conj(seeds[i], g);
      if (!seed_in[y]) {
        seed_in[y] = true;
        seeds.push_back(y);
      }
    }
  return Subgroup(G, mask_members(closure_mask(*G, seeds)));
}

Subgroup derived_subgroup(const GroupPtr& G) {
  std::vector<Elem> comms;
  const auto& gens = G->generators();
  for (Elem a : gens)
    for (Elem b : gens) comms.push_back(G->mul(G->mul(G->inv(a), G->inv(b)), G->mul(a, b)));
  return normal_closure(G, comms);
}

bool is_normal(const FiniteGroup& G, const Subgroup& H) {
  for (Elem h : H.members())
    for (Elem g : G.generators())
      if (!H.contains(G.conj(h, g))) return false;
  return true;
}

bool is_abelian(const Subgroup& H) {
  const FiniteGroup& G = *H.parent();
  auto gens = subgroup_generators(H);
  for (Elem a : gens)
    for (Elem b : gens)
      if (G.mul(a, b) != G.mul(b, a)) return false;
  return true;
}

Subgroup conjugate_subgroup(const Subgroup& H, Elem g) {
  std::vector<Elem> out;
  out.reserve(H.order());
  for (Elem h : H.members()) out.push_back(H.parent()->conj(h, g));
  return Subgroup(H.parent(), std::move(out));
}

Quotient quotient(const GroupPtr& G, const Subgroup& N) {
  if (!is_normal(*G, N)) throw Error(ErrorKind::NotNormal, "subgroup is not normal in " + G->name());
  const std::size_t n = G->order();
  Quotient Q;
  Q.projection.assign(n, static_cast<Elem>(-1));
  for (Elem x = 0; x < n; ++x) {
    if (Q.projection[x] != static_cast<Elem>(-1)) continue;
    Elem c = static_cast<Elem>(Q.coset_rep.size());
    Q.coset_rep.push_back(x);
    for (Elem m : N.members()) Q.projection[G->mul(x, m)] = c;
  }
  std::size_t k = Q.coset_rep.size();
  std::vector<std::vector<Elem>> table(k, std::vector<Elem>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) table[i][j] = Q.projection[G->mul(Q.coset_rep[i], Q.coset_rep[j])];
  std::vector<std::string> labels;
  for (Elem r : Q.coset_rep) labels.push_back(G->label(r) + "N");
  Q.group = FiniteGroup::from_cayley(G->name() + "/N", std::move(table),
                                     {GroupOrigin::Kind::Quotient, "quotient of " + G->name() + " by a normal subgroup of order " +
                                                                       std::to_string(N.order())},
                                     n, std::move(labels));
  return Q;
}

SubgroupGroup subgroup_as_group(const Subgroup& H) {
  const FiniteGroup& G = *H.parent();
  const auto& m = H.members();
  std::size_t k = m.size();
  std::vector<std::vector<Elem>> table(k, std::vector<Elem>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) table[i][j] = static_cast<Elem>(H.index_of(G.mul(m[i], m[j])));
  std::vector<std::string> labels;
  for (Elem x : m) labels.push_back(G.label(x));
  SubgroupGroup out;
  out.group = FiniteGroup::from_cayley(G.name() + "_sub", std::move(table),
                                       {GroupOrigin::Kind::Subgroup, "subgroup of " + G.name() + " of order " + std::to_string(k)},
                                       G.order(), std::move(labels));
  out.embed = m;
  return out;
}

Subgroup preimage(const GroupPtr& G, const Quotient& Q, const std::vector<Elem>& cosets) {
  std::vector<bool> want(Q.group->order(), false);
  for (Elem c : cosets) want[c] = true;
  std::vector<Elem> out;
  for (Elem x = 0; x < G->order(); ++x)
    if (want[Q.projection[x]]) out.push_back(x);
  return Subgroup(G, std::move(out));
}

Subgroup image(const Quotient& Q, const Subgroup& H) {
  std::vector<Elem> out;
  for (Elem h : H.members()) out.push_back(Q.projection[h]);
  return Subgroup(Q.group, std::move(out));
}

Subgroup sylow_subgroup(const GroupPtr& G, std::uint64_t p) { return sylow_subgroup(Subgroup::whole(G), p); }

Subgroup sylow_subgroup(const Subgroup& H, std::uint64_t p) {
  const GroupPtr& G = H.parent();
  const std::uint64_t target = nt::p_part(H.order(), p);
  Subgroup P = Subgroup::trivial(G);
  // A proper p-subgroup P of H has p dividing |N_H(P) : P|, so some x in
  // N_H(P) \ P has x^p in P and <P, x> is a larger p-subgroup.
  while (P.order() < target) {
    auto gensP = subgroup_generators(P);
    bool grown = false;
    for (Elem x : H.members()) {
      if (P.contains(x) || !P.contains(G->pow(x, static_cast<std::int64_t>(p)))) continue;
      bool normalizes = true;
      for (Elem h : gensP)
        if (!P.contains(G->conj(h, x))) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      gensP.push_back(x);
      P = generated_subgroup(G, gensP);
      grown = true;
      break;
    }
    if (!grown) throw Error(ErrorKind::MalformedInput, "Sylow extension failed");
  }
  return P;
}

std::optional<Elem> conjugating_element(const FiniteGroup& G, const Subgroup& H1, const Subgroup& H2) {
  if (H1.order() != H2.order()) return std::nullopt;
  auto gens = subgroup_generators(H1);
  for (Elem g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Elem h : gens)
      if (!H2.contains(G.conj(h, g))) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return std::nullopt;
}

bool subgroups_conjugate(const FiniteGroup& G, const Subgroup& H1, const Subgroup& H2) {
  return conjugating_element(G, H1, H2).has_value();
}

std::vector<Subgroup> all_subgroups(const GroupPtr& G) {
  const std::size_t n = G->order();
  std::map<std::vector<bool>, std::vector<Elem>> found;
  std::vector<std::vector<bool>> queue;
  std::vector<bool> triv(n, false);
  triv[0] = true;
  found.emplace(triv, std::vector<Elem>{});
  queue.push_back(triv);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    std::vector<bool> cur = queue[i];
    std::vector<Elem> gens = found[cur];
    for (Elem x = 1; x < n; ++x) {
      if (cur[x]) continue;
      auto g2 = gens;
      g2.push_back(x);
      auto mask = closure_mask(*G, g2);
      if (found.emplace(mask, g2).second) queue.push_back(mask);
    }
  }
  std::vector<Subgroup> out;
  for (const auto& [mask, gens] : found) out.emplace_back(G, mask_members(mask));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return out;
}

Elem p_part(const FiniteGroup& G, Elem x, std::uint64_t p) {
  std::uint64_t o = G.element_order(x);
  std::uint64_t pp = nt::p_part(o, p), rest = o / pp;
  if (pp == 1) return 0;
  if (rest == 1) return x;
  // exponent e with e = 0 mod rest and e = 1 mod pp
  std::uint64_t e = rest * nt::invmod(static_cast<std::int64_t>(rest % pp), pp);
  return G.pow(x, static_cast<std::int64_t>(e % o));
}

Elem p_part_of_coset(const Quotient& Q, Elem g, std::uint64_t p) { return p_part(*Q.group, Q.projection[g], p); }

Elem p_part_of_coset(const GroupPtr& G, const Subgroup& N, Elem g, std::uint64_t p) {
  return p_part_of_coset(quotient(G, N), g, p);
}

bool is_p_regular(const FiniteGroup& G, Elem x, std::uint64_t p) { return G.element_order(x) % p != 0; }

}  // namespace thetablocks
