#include "homleib/connections.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace homleib {

namespace {

// Orbit of beta as raw value vectors, exponent m = position in the list.
std::vector<Vec> orbit_values(const SplitDecomposition& d, const Root& beta) {
  std::vector<Vec> out;
  for (const Root& r : root_orbit(d, beta)) out.push_back(r.values);
  return out;
}

struct Accept {
  int m;
  int sign;
};

// sigma_k = sign * beta o phi^{-m}?  Smallest m wins, +1 preferred.
std::optional<Accept> accepts(const std::vector<Vec>& beta_orbit, const Vec& tau) {
  for (size_t m = 0; m < beta_orbit.size(); ++m) {
    if (tau == beta_orbit[m]) return Accept{static_cast<int>(m), +1};
    if (tau == vec_neg(beta_orbit[m])) return Accept{static_cast<int>(m), -1};
  }
  return std::nullopt;
}

std::vector<Vec> recompute_sums(const SplitDecomposition& d, const std::vector<Root>& chain) {
  std::vector<Vec> sums;
  Vec sigma = chain.front().values;
  sums.push_back(sigma);
  for (size_t i = 1; i < chain.size(); ++i) {
    sigma = vec_add(functional_twist(d, sigma, 1), functional_twist(d, chain[i].values, 1));
    sums.push_back(sigma);
  }
  return sums;
}

// Breadth-first search for the shortest connection.  States are roots usable
// as intermediate partial sums; `links` are the roots usable as alpha_2..k.
// Acceptance is tested on every transition target (which may lie outside the
// state set: the terminal partial sum need not be a root), optionally
// restricted to the state set (the not-J variant requires sigma_k on side).
std::optional<Connection> bfs_connection(const SplitDecomposition& d, const Root& alpha,
                                         const Root& beta, const std::vector<int>& state_set,
                                         const std::vector<int>& links,
                                         bool accept_only_states) {
  const std::vector<Vec> beta_orbit = orbit_values(d, beta);
  const std::vector<Root> alpha_orbit = root_orbit(d, alpha);

  const int nroots = static_cast<int>(d.roots.size());
  std::vector<char> is_state(nroots, 0);
  for (int s : state_set) is_state[s] = 1;

  auto in_state_set = [&](const Vec& v) {
    const int idx = d.root_index(Root{v});
    return idx >= 0 && is_state[idx];
  };

  struct Trace {
    int prev = -1;  // previous state (root index), -1 for a start
    int link = -1;  // link root index that produced this state
    int start_shift = 0;
  };
  std::vector<std::optional<Trace>> seen(nroots);

  // Depth-1 states: the orbit of alpha, visited in lexicographic order.
  std::vector<std::pair<Root, int>> starts;  // (root, orbit exponent)
  for (size_t n = 0; n < alpha_orbit.size(); ++n)
    starts.emplace_back(alpha_orbit[n], static_cast<int>(n));
  std::sort(starts.begin(), starts.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  auto build = [&](int last_state, int final_link, const Vec& tau,
                   const Accept& acc) -> Connection {
    std::vector<Root> rev;
    int cur = last_state;
    int shift = 0;
    while (cur >= 0) {
      const Trace& t = *seen[cur];
      if (t.prev < 0) {
        rev.push_back(d.roots[cur]);
        shift = t.start_shift;
        break;
      }
      rev.push_back(d.roots[t.link]);
      cur = t.prev;
    }
    std::reverse(rev.begin(), rev.end());
    if (final_link >= 0) rev.push_back(d.roots[final_link]);
    Connection c;
    c.chain = std::move(rev);
    c.sums = recompute_sums(d, c.chain);
    c.start_shift = shift;
    c.end_shift = acc.m;
    c.end_sign = acc.sign;
    if (!(c.sums.back() == tau))
      throw MathError(ErrCode::InternalInconsistency, "connection sums do not replay");
    return c;
  };

  std::deque<int> queue;
  for (const auto& [root, exponent] : starts) {
    const int idx = d.root_index(root);
    if (!is_state[idx] || seen[idx]) continue;  // orbit can leave a side set only if inputs are odd
    seen[idx] = Trace{-1, -1, exponent};
    queue.push_back(idx);
  }
  // k = 1: a start that is itself an accepted terminal sum.
  for (int idx : queue) {
    const Vec& v = d.roots[idx].values;
    if (const auto acc = accepts(beta_orbit, v)) {
      Connection c;
      c.chain = {d.roots[idx]};
      c.sums = {v};
      c.start_shift = seen[idx]->start_shift;
      c.end_shift = acc->m;
      c.end_sign = acc->sign;
      return c;
    }
  }

  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop_front();
    const Vec sigma_twisted = functional_twist(d, d.roots[s].values, 1);
    for (int g : links) {
      const Vec tau = vec_add(sigma_twisted, functional_twist(d, d.roots[g].values, 1));
      if (const auto acc = accepts(beta_orbit, tau)) {
        if (!accept_only_states || in_state_set(tau)) return build(s, g, tau, *acc);
      }
      const int idx = d.root_index(Root{tau});
      if (idx >= 0 && is_state[idx] && !seen[idx]) {
        seen[idx] = Trace{s, g, 0};
        queue.push_back(idx);
      }
    }
  }
  return std::nullopt;
}

std::vector<int> all_root_indices(const SplitDecomposition& d) {
  std::vector<int> out(d.roots.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i);
  return out;
}

int require_root(const SplitDecomposition& d, const Root& r) {
  const int idx = d.root_index(r);
  if (idx < 0) throw MathError(ErrCode::RootNotInLambda, root_str(r) + " is not a root");
  return idx;
}

// Generic replay used by both verifiers.  side_filter, when set, restricts
// every partial sum; link_filter restricts chain[1..].
bool replay(const SplitDecomposition& d, const Root& alpha, const Root& beta, const Connection& c,
            const std::function<bool(const Root&)>& link_ok,
            const std::function<bool(const Vec&)>& sum_ok) {
  if (c.chain.empty()) return false;
  for (const Root& r : c.chain)
    if (d.root_index(r) < 0) return false;
  if (!(c.chain.front().values == root_phi_pow(d, alpha.values, c.start_shift))) return false;
  for (size_t i = 1; i < c.chain.size(); ++i)
    if (!link_ok(c.chain[i])) return false;
  const std::vector<Vec> sums = recompute_sums(d, c.chain);
  if (!c.sums.empty() && !(c.sums == sums)) return false;  // stored sums must match
  // sigma_1..sigma_{k-1} are roots (and side-members for the not-J variant).
  for (size_t i = 0; i + 1 < sums.size(); ++i)
    if (d.root_index(Root{sums[i]}) < 0 || !sum_ok(sums[i])) return false;
  const Vec expected = vec_scale(Scalar(c.end_sign),
                                 root_phi_pow(d, beta.values, c.end_shift));
  if (!(sums.back() == expected)) return false;
  if (c.end_sign != 1 && c.end_sign != -1) return false;
  return true;
}

std::vector<int> side_indices(const SplitDecomposition& d, const std::vector<Root>& side) {
  std::vector<int> out;
  for (const Root& r : side) out.push_back(d.root_index(r));
  std::sort(out.begin(), out.end());
  return out;
}

RootPartition partition_by_reachability(const std::vector<Root>& universe,
                                        const std::function<bool(const Root&, const Root&)>& reach,
                                        const char* relation_name) {
  const int n = static_cast<int>(universe.size());
  std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = reach(universe[i], universe[j]) ? 1 : 0;
  for (int i = 0; i < n; ++i) {
    if (!m[i][i])
      throw MathError(ErrCode::InternalInconsistency,
                      std::string(relation_name) + " is not reflexive at " + root_str(universe[i]));
    for (int j = 0; j < n; ++j) {
      if (m[i][j] != m[j][i])
        throw MathError(ErrCode::HypothesisMissing,
                        std::string(relation_name) + " is not symmetric between " +
                            root_str(universe[i]) + " and " + root_str(universe[j]));
      for (int k = 0; k < n; ++k)
        if (m[i][j] && m[j][k] && !m[i][k])
          throw MathError(ErrCode::HypothesisMissing,
                          std::string(relation_name) + " is not transitive at " +
                              root_str(universe[i]) + " ~ " + root_str(universe[j]) + " ~ " +
                              root_str(universe[k]));
    }
  }
  RootPartition part;
  std::vector<char> used(n, 0);
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    std::vector<Root> cls;
    for (int j = 0; j < n; ++j)
      if (m[i][j]) {
        cls.push_back(universe[j]);
        used[j] = 1;
      }
    std::sort(cls.begin(), cls.end());
    part.classes.push_back(std::move(cls));
  }
  std::sort(part.classes.begin(), part.classes.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return part;
}

}  // namespace

std::optional<Connection> connected(const SplitDecomposition& d, const Root& alpha,
                                    const Root& beta) {
  require_root(d, alpha);
  require_root(d, beta);
  const std::vector<int> all = all_root_indices(d);
  return bfs_connection(d, alpha, beta, all, all, /*accept_only_states=*/false);
}

bool verify_connection(const SplitDecomposition& d, const Root& alpha, const Root& beta,
                       const Connection& c) {
  if (d.root_index(alpha) < 0 || d.root_index(beta) < 0) return false;
  return replay(
      d, alpha, beta, c, [](const Root&) { return true; }, [](const Vec&) { return true; });
}

RootPartition connection_classes(const SplitDecomposition& d) {
  return partition_by_reachability(
      d.roots,
      [&](const Root& x, const Root& y) { return connected(d, x, y).has_value(); },
      "connection relation");
}

int RootPartition::class_of(const Root& r) const {
  for (size_t i = 0; i < classes.size(); ++i)
    if (std::binary_search(classes[i].begin(), classes[i].end(), r)) return static_cast<int>(i);
  return -1;
}

namespace {

JSide common_side(const SplitDecomposition& d, const JSplit& js, const Root& alpha,
                  const Root& beta) {
  require_root(d, alpha);
  require_root(d, beta);
  auto side_of = [&](const Root& r) -> std::optional<JSide> {
    if (std::find(js.lambda_J.begin(), js.lambda_J.end(), r) != js.lambda_J.end()) return JSide::J;
    if (std::find(js.lambda_notJ.begin(), js.lambda_notJ.end(), r) != js.lambda_notJ.end())
      return JSide::NotJ;
    return std::nullopt;  // mixed
  };
  const auto sa = side_of(alpha);
  const auto sb = side_of(beta);
  if (!sa || !sb)
    throw MathError(ErrCode::ClassMismatch, "a queried root has mixed position relative to J");
  if (*sa != *sb)
    throw MathError(ErrCode::ClassMismatch, root_str(alpha) + " and " + root_str(beta) +
                                                " lie on different sides of the J split");
  return *sa;
}

}  // namespace

std::optional<Connection> nj_connected(const SplitDecomposition& d, const JSplit& js,
                                       const Root& alpha, const Root& beta) {
  const JSide side = common_side(d, js, alpha, beta);
  const std::vector<int> states =
      side_indices(d, side == JSide::J ? js.lambda_J : js.lambda_notJ);
  const std::vector<int> links = side_indices(d, js.lambda_notJ);
  return bfs_connection(d, alpha, beta, states, links, /*accept_only_states=*/true);
}

bool verify_nj_connection(const SplitDecomposition& d, const JSplit& js, const Root& alpha,
                          const Root& beta, const Connection& c) {
  JSide side;
  try {
    side = common_side(d, js, alpha, beta);
  } catch (const MathError&) {
    return false;
  }
  const std::vector<Root>& side_roots = side == JSide::J ? js.lambda_J : js.lambda_notJ;
  auto on_side = [&](const Root& r) {
    return std::find(side_roots.begin(), side_roots.end(), r) != side_roots.end();
  };
  auto link_ok = [&](const Root& r) {
    return std::find(js.lambda_notJ.begin(), js.lambda_notJ.end(), r) != js.lambda_notJ.end();
  };
  // Every partial sum, including the last, stays on the common side.
  auto sum_ok = [&](const Vec& v) { return on_side(Root{v}); };
  if (!replay(d, alpha, beta, c, link_ok, sum_ok)) return false;
  const std::vector<Vec> sums = recompute_sums(d, c.chain);
  return on_side(Root{sums.back()});
}

RootPartition nj_classes(const SplitDecomposition& d, const JSplit& js, JSide side) {
  const std::vector<Root>& universe = side == JSide::J ? js.lambda_J : js.lambda_notJ;
  if (universe.empty()) return RootPartition{};
  std::vector<std::string> missing;
  if (!is_symmetric_subset(d, js.lambda_notJ)) missing.push_back("Lambda^{not J} symmetric");
  if (side == JSide::J) {
    if (!is_symmetric_subset(d, js.lambda_J)) missing.push_back("Lambda^J symmetric");
    if (!(derived(d.algebra) == Subspace::full(d.algebra.dim))) missing.push_back("[L,L] = L");
  }
  if (!missing.empty()) {
    std::string what = "not-J connectivity classes need:";
    for (const auto& m : missing) what += " " + m + ";";
    throw MathError(ErrCode::HypothesisMissing, what);
  }
  return partition_by_reachability(
      universe,
      [&](const Root& x, const Root& y) { return nj_connected(d, js, x, y).has_value(); },
      "not-J connection relation");
}

}  // namespace homleib
