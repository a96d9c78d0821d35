#include "alc/root_datum.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <queue>
#include <sstream>

#include <nlohmann/json.hpp>

namespace alc {

using nlohmann::json;

// --------------------------------------------------------------- presets

namespace {

struct PresetDef {
  int rank;
  std::vector<VecZ> roots, coroots;
};

// Simply-connected-dual realization for a Cartan matrix A (A[i][j] =
// <alpha_i^vee, alpha_j>): coroots are the standard basis vectors, roots are
// the columns of A.
PresetDef from_cartan(const MatZ& cartan) {
  int n = static_cast<int>(cartan.size());
  PresetDef d;
  d.rank = n;
  for (int j = 0; j < n; ++j) {
    VecZ root(n), coroot(n, 0);
    for (int i = 0; i < n; ++i) root[i] = cartan[i][j];
    coroot[j] = 1;
    d.roots.push_back(root);
    d.coroots.push_back(coroot);
  }
  return d;
}

MatZ cartan_A(int n) {
  MatZ a(n, VecZ(n, 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

MatZ cartan_E(int n) {
  // Bourbaki numbering: node 2 hangs off node 4 of the A-chain 1-3-4-5-6(-7-8).
  MatZ a(n, VecZ(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
  link(1, 3);
  link(3, 4);
  link(2, 4);
  link(4, 5);
  link(5, 6);
  if (n >= 7) link(6, 7);
  if (n >= 8) link(7, 8);
  return a;
}

std::map<std::string, PresetDef> make_presets() {
  std::map<std::string, PresetDef> m;
  m["A1-adjoint"] = PresetDef{1, {{1}}, {{2}}};
  m["A1-sc"] = PresetDef{1, {{2}}, {{1}}};
  m["A2"] = from_cartan(cartan_A(2));
  m["A3"] = from_cartan(cartan_A(3));
  // B2 in the standard orthogonal coordinates: alpha1 = e1-e2 (long),
  // alpha2 = e2 (short).
  m["B2"] = PresetDef{2, {{1, -1}, {0, 1}}, {{1, -1}, {0, 2}}};
  // C3 via its geometric realization: e1-e2, e2-e3, 2*e3.
  m["C3"] = PresetDef{3,
                      {{1, -1, 0}, {0, 1, -1}, {0, 0, 2}},
                      {{1, -1, 0}, {0, 1, -1}, {0, 0, 1}}};
  m["D4"] = PresetDef{4,
                      {{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}},
                      {{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}}};
  m["G2"] = from_cartan(MatZ{{2, -1}, {-3, 2}});
  m["F4"] = from_cartan(MatZ{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
  m["E6"] = from_cartan(cartan_E(6));
  m["E7"] = from_cartan(cartan_E(7));
  m["E8"] = from_cartan(cartan_E(8));
  return m;
}

const std::map<std::string, PresetDef>& presets() {
  static const std::map<std::string, PresetDef> m = make_presets();
  return m;
}

}  // namespace

std::vector<std::string> RootDatum::preset_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : presets()) names.push_back(k);
  return names;
}

std::shared_ptr<const RootDatum> RootDatum::preset(const std::string& name) {
  auto it = presets().find(name);
  if (it == presets().end()) throw ParseError("unknown preset: " + name);
  return build(it->second.rank, it->second.roots, it->second.coroots, name);
}

std::shared_ptr<const RootDatum> RootDatum::build(int rank,
                                                  std::vector<VecZ> simple_roots,
                                                  std::vector<VecZ> simple_coroots,
                                                  std::string name) {
  if (rank <= 0) throw BadPairing("rank must be positive");
  if (simple_roots.size() != simple_coroots.size())
    throw BadPairing("simple root and coroot lists must have equal length");
  if (static_cast<int>(simple_roots.size()) > rank)
    throw BadPairing("more simple roots than the rank allows");
  for (const auto& v : simple_roots)
    if (static_cast<int>(v.size()) != rank) throw BadPairing("root of wrong dimension");
  for (const auto& v : simple_coroots)
    if (static_cast<int>(v.size()) != rank) throw BadPairing("coroot of wrong dimension");

  auto rd = std::shared_ptr<RootDatum>(new RootDatum());
  rd->rank_ = rank;
  rd->name_ = std::move(name);
  rd->simple_roots_ = std::move(simple_roots);
  rd->simple_coroots_ = std::move(simple_coroots);
  rd->derive();
  return rd;
}

std::shared_ptr<const RootDatum> RootDatum::from_json(const json& j) {
  if (j.is_string()) return preset(j.get<std::string>());
  if (!j.is_object()) throw ParseError("root datum JSON must be an object or preset name");
  if (j.contains("preset")) return preset(j.at("preset").get<std::string>());
  if (!j.contains("rank") || !j.contains("simple_roots") || !j.contains("simple_coroots"))
    throw ParseError("root datum JSON needs rank, simple_roots, simple_coroots");
  int rank = j.at("rank").get<int>();
  auto roots = j.at("simple_roots").get<std::vector<VecZ>>();
  auto coroots = j.at("simple_coroots").get<std::vector<VecZ>>();
  return build(rank, std::move(roots), std::move(coroots));
}

json RootDatum::to_json() const {
  if (presets().count(name_)) return json{{"preset", name_}};
  return json{{"rank", rank_},
              {"simple_roots", simple_roots_},
              {"simple_coroots", simple_coroots_}};
}

// ------------------------------------------------------------ derivation

void RootDatum::derive() {
  const int k = num_simple();
  // Cartan matrix checks
  for (int i = 0; i < k; ++i) {
    if (dot(simple_coroots_[i], simple_roots_[i]) != 2)
      throw BadPairing("Cartan diagonal entry is not 2 at index " + std::to_string(i));
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      Int aij = dot(simple_coroots_[i], simple_roots_[j]);
      Int aji = dot(simple_coroots_[j], simple_roots_[i]);
      if (aij > 0 || aji > 0) throw BadPairing("positive off-diagonal Cartan entry");
      if ((aij == 0) != (aji == 0)) throw BadPairing("asymmetric zero in Cartan matrix");
    }
  }

  classify();  // also certifies finite type

  // Positive-root closure. Each positive root is tracked together with its
  // coroot and the coefficients of its expansion on the simple roots.
  struct Entry {
    VecZ root, coroot, coeffs;
  };
  std::map<VecZ, Entry> found;
  std::deque<VecZ> queue;
  for (int i = 0; i < k; ++i) {
    VecZ c(k, 0);
    c[i] = 1;
    found[simple_roots_[i]] = Entry{simple_roots_[i], simple_coroots_[i], c};
    queue.push_back(simple_roots_[i]);
  }
  const size_t closure_bound = 1200;  // E8 needs 120
  while (!queue.empty()) {
    Entry e = found.at(queue.front());
    queue.pop_front();
    for (int i = 0; i < k; ++i) {
      Int ci = dot(simple_coroots_[i], e.root);
      VecZ r = vec_sub(e.root, vec_scale(ci, simple_roots_[i]));
      Int di = dot(e.coroot, simple_roots_[i]);
      VecZ rv = vec_sub(e.coroot, vec_scale(di, simple_coroots_[i]));
      VecZ cf = e.coeffs;
      cf[i] -= ci;
      bool positive = true, negative = true;
      for (Int x : cf) {
        if (x > 0) negative = false;
        if (x < 0) positive = false;
      }
      if (!positive) {
        if (!negative) throw NotFiniteType("reflection closure left the root cone");
        continue;
      }
      if (found.emplace(r, Entry{r, rv, cf}).second) {
        queue.push_back(r);
        if (found.size() > closure_bound)
          throw NotFiniteType("reflection closure exceeded the configured bound");
      }
    }
  }

  std::vector<Entry> entries;
  for (auto& [r, e] : found) entries.push_back(e);
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    Int ha = 0, hb = 0;
    for (Int x : a.coeffs) ha += x;
    for (Int x : b.coeffs) hb += x;
    if (ha != hb) return ha < hb;
    return a.root < b.root;
  });
  two_rho_ = VecZ(rank_, 0);
  two_rho_check_ = VecZ(rank_, 0);
  for (const auto& e : entries) {
    pos_roots_.push_back(e.root);
    pos_coroots_.push_back(e.coroot);
    pos_root_simple_coords_.push_back(e.coeffs);
    two_rho_ = vec_add(two_rho_, e.root);
    two_rho_check_ = vec_add(two_rho_check_, e.coroot);
  }

  // highest root and Coxeter number per component
  for (size_t c = 0; c < components_.size(); ++c) {
    Int best_h = -1;
    int best = -1;
    for (int r = 0; r < num_positive_roots(); ++r) {
      // component membership via the support of the simple-root coefficients
      int comp = -1;
      for (int i = 0; i < k; ++i)
        if (pos_root_simple_coords_[r][i] != 0) {
          comp = node_component_[i];
          break;
        }
      if (comp != static_cast<int>(c)) continue;
      Int h = 0;
      for (Int x : pos_root_simple_coords_[r]) h += x;
      if (h > best_h) {
        best_h = h;
        best = r;
      }
    }
    components_[c].highest_root = pos_roots_[best];
    components_[c].highest_coroot = pos_coroots_[best];
    components_[c].coxeter_number = best_h + 1;
  }

  // sanity: <rho_check, alpha_i> = 1 for every simple root
  for (int i = 0; i < k; ++i) {
    if (dot(two_rho_check_, simple_roots_[i]) != 2)
      throw BadPairing("two_rho_check does not pair to 2 with a simple root");
    if (dot(simple_coroots_[i], two_rho_) != 2)
      throw BadPairing("two_rho does not pair to 2 with a simple coroot");
  }

  if (weyl_order_ <= kWeylEnumerationCap) enumerate_weyl();
}

// Cartan graph classification; doubles as the finite-type certificate.
void RootDatum::classify() {
  const int k = num_simple();
  node_component_.assign(k, -1);
  MatZ cartan(k, VecZ(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) cartan[i][j] = dot(simple_coroots_[i], simple_roots_[j]);

  std::vector<std::vector<int>> adj(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && cartan[i][j] != 0) adj[i].push_back(j);

  std::vector<int> comp_of(k, -1);
  int ncomp = 0;
  for (int i = 0; i < k; ++i) {
    if (comp_of[i] >= 0) continue;
    std::deque<int> q{i};
    comp_of[i] = ncomp;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : adj[u])
        if (comp_of[v] < 0) {
          comp_of[v] = ncomp;
          q.push_back(v);
        }
    }
    ++ncomp;
  }
  node_component_ = comp_of;

  weyl_order_ = 1;
  for (int c = 0; c < ncomp; ++c) {
    Component comp;
    for (int i = 0; i < k; ++i)
      if (comp_of[i] == c) comp.nodes.push_back(i);
    const int n = static_cast<int>(comp.nodes.size());
    comp.type_rank = n;

    int edges = 0, max_mult = 1, mult2_edges = 0, mult3_edges = 0;
    int branch = -1, max_deg = 0;
    std::pair<int, int> double_edge{-1, -1};
    for (int a = 0; a < n; ++a) {
      int deg = 0;
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        Int m = cartan[comp.nodes[a]][comp.nodes[b]] * cartan[comp.nodes[b]][comp.nodes[a]];
        if (m == 0) continue;
        ++deg;
        if (a < b) {
          ++edges;
          if (m == 2) {
            ++mult2_edges;
            double_edge = {a, b};
          } else if (m == 3) {
            ++mult3_edges;
          } else if (m != 1) {
            throw NotFiniteType("Cartan bond of multiplicity >= 4");
          }
          max_mult = std::max<int>(max_mult, static_cast<int>(m));
        }
      }
      if (deg > max_deg) max_deg = deg;
      if (deg >= 3) branch = a;
    }
    if (edges != n - 1) throw NotFiniteType("Dynkin graph of a component is not a tree");
    if (max_deg > 3) throw NotFiniteType("Dynkin node of degree > 3");

    auto arm_lengths = [&]() {
      // lengths of the three arms at the branch node
      std::vector<int> arms;
      std::vector<std::vector<int>> local(n);
      for (int a = 0; a < n; ++a)
        for (int bb = 0; bb < n; ++bb) {
          if (a == bb) continue;
          if (cartan[comp.nodes[a]][comp.nodes[bb]] != 0) local[a].push_back(bb);
        }
      for (int s : local[branch]) {
        int len = 1, prev = branch, cur = s;
        for (;;) {
          int next = -1;
          for (int t : local[cur])
            if (t != prev) next = t;
          if (next < 0) break;
          prev = cur;
          cur = next;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      return arms;
    };

    Int order = 0;
    auto factorial = [](Int n2) {
      Int f = 1;
      for (Int i = 2; i <= n2; ++i) f *= i;
      return f;
    };

    if (mult3_edges > 0) {
      if (n != 2 || mult3_edges != 1) throw NotFiniteType("triple bond outside G2");
      comp.type = "G";
      comp.bad_primes = {2, 3};
      order = 12;
    } else if (mult2_edges > 1) {
      throw NotFiniteType("more than one double bond in a component");
    } else if (mult2_edges == 1) {
      if (branch >= 0) throw NotFiniteType("double bond on a branched diagram");
      // path with one double edge; locate the edge position along the path
      auto [a, b] = double_edge;
      std::vector<int> deg(n, 0);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (x != y && cartan[comp.nodes[x]][comp.nodes[y]] != 0) ++deg[x];
      bool at_end = (deg[a] == 1) || (deg[b] == 1);
      if (n == 2) at_end = true;
      if (!at_end) {
        if (n != 4) throw NotFiniteType("interior double bond outside F4");
        comp.type = "F";
        comp.bad_primes = {2, 3};
        order = 1152;
      } else {
        // B_n: the short simple root sits at the end of the chain.
        int end_node = (deg[a] == 1) ? a : b;
        int other = (end_node == a) ? b : a;
        Int a_eo = cartan[comp.nodes[end_node]][comp.nodes[other]];
        // <end^vee, other> = -2 means the end root is short (B); -1 means long (C).
        comp.type = (a_eo == -2) ? "B" : "C";
        if (n == 2) comp.type = "B";  // B2 = C2
        comp.bad_primes = {2};
        order = (Int(1) << n) * factorial(n);
      }
    } else if (branch >= 0) {
      auto arms = arm_lengths();
      if (arms.size() != 3) throw NotFiniteType("bad branch structure");
      if (arms[0] == 1 && arms[1] == 1) {
        comp.type = "D";
        comp.bad_primes = {2};
        order = (Int(1) << (n - 1)) * factorial(n);
      } else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
        comp.type = "E";
        if (arms[2] == 2) {
          comp.bad_primes = {2, 3};
          order = 51840;
        } else if (arms[2] == 3) {
          comp.bad_primes = {2, 3};
          order = 2903040;
        } else {
          comp.bad_primes = {2, 3, 5};
          order = 696729600;
        }
      } else {
        throw NotFiniteType("branched diagram is not of D/E type");
      }
    } else {
      comp.type = "A";
      comp.bad_primes = {};
      order = factorial(n + 1);
    }
    if (weyl_order_ > (Int(4) << 60) / std::max<Int>(order, 1))
      throw NotFiniteType("Weyl group order overflow");
    weyl_order_ *= order;
    components_.push_back(std::move(comp));
  }
}

void RootDatum::enumerate_weyl() {
  const int k = num_simple();
  // generator matrices
  std::vector<MatZ> gen_cw(k), gen_w(k);
  for (int i = 0; i < k; ++i) {
    MatZ mc = mat_identity(rank_), mw = mat_identity(rank_);
    for (int j = 0; j < rank_; ++j) {
      // s_i on coweights: v -> v - <v, alpha_i> alpha_i^vee
      VecZ e(rank_, 0);
      e[j] = 1;
      VecZ img = vec_sub(e, vec_scale(dot(e, simple_roots_[i]), simple_coroots_[i]));
      for (int r = 0; r < rank_; ++r) mc[r][j] = img[r];
      // s_i on weights: x -> x - <alpha_i^vee, x> alpha_i
      VecZ imw = vec_sub(e, vec_scale(dot(simple_coroots_[i], e), simple_roots_[i]));
      for (int r = 0; r < rank_; ++r) mw[r][j] = imw[r];
    }
    gen_cw[i] = mc;
    gen_w[i] = mw;
  }

  weyl_.push_back(WeylElt{mat_identity(rank_), mat_identity(rank_), 0, 0, {}});
  weyl_index_[weyl_[0].on_coweights] = 0;
  std::deque<int> queue{0};
  weyl_left_.assign(k, {});
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < k; ++i) {
      MatZ mc = mat_mul(gen_cw[i], weyl_[cur].on_coweights);
      auto it = weyl_index_.find(mc);
      int idx;
      if (it == weyl_index_.end()) {
        idx = static_cast<int>(weyl_.size());
        weyl_.push_back(WeylElt{mc, mat_mul(gen_w[i], weyl_[cur].on_weights),
                                weyl_[cur].length + 1, 0, {}});
        weyl_index_[mc] = idx;
        queue.push_back(idx);
        if (static_cast<Int>(weyl_.size()) > weyl_order_)
          throw NotFiniteType("Weyl enumeration exceeded the predicted order");
      } else {
        idx = it->second;
      }
      for (int g = 0; g < k; ++g)
        if (weyl_left_[g].size() < weyl_.size()) weyl_left_[g].resize(weyl_.size(), -1);
      weyl_left_[i][cur] = idx;
    }
  }
  if (static_cast<Int>(weyl_.size()) != weyl_order_)
    throw NotFiniteType("Weyl enumeration does not match the predicted order");

  // inverses, w0, lex-least words
  for (size_t a = 0; a < weyl_.size(); ++a) {
    // inverse matrix on coweights equals transpose-free search: walk the word
    if (weyl_[a].length > weyl_[w0_].length) w0_ = static_cast<int>(a);
  }
  for (size_t a = 0; a < weyl_.size(); ++a) {
    // lex-least reduced word via greedy least left descent
    std::vector<int> word;
    int cur = static_cast<int>(a);
    while (weyl_[cur].length > 0) {
      for (int i = 0; i < k; ++i) {
        int nxt = weyl_left_[i][cur];
        if (weyl_[nxt].length < weyl_[cur].length) {
          word.push_back(i);
          cur = nxt;
          break;
        }
      }
    }
    weyl_[a].word = std::move(word);
    // inverse: apply the word in the same order starting from e
    int inv = 0;
    for (int s : weyl_[a].word) inv = weyl_left_[s][inv];
    // word(a) read left-to-right is a = s_{i1} ... s_{im}; building inv by
    // left-multiplying in word order yields s_{im} ... s_{i1} = a^{-1}.
    weyl_[a].inverse = inv;
  }

  reflection_of_posroot_.assign(num_positive_roots(), -1);
  for (int r = 0; r < num_positive_roots(); ++r) {
    // s_beta on coweights: v -> v - <v, beta> beta^vee
    MatZ mc = mat_identity(rank_);
    for (int j = 0; j < rank_; ++j) {
      VecZ e(rank_, 0);
      e[j] = 1;
      VecZ img = vec_sub(e, vec_scale(dot(e, pos_roots_[r]), pos_coroots_[r]));
      for (int rr = 0; rr < rank_; ++rr) mc[rr][j] = img[rr];
    }
    auto it = weyl_index_.find(mc);
    if (it == weyl_index_.end()) throw NotFiniteType("reflection missing from Weyl group");
    reflection_of_posroot_[r] = it->second;
  }
  weyl_available_ = true;
}

// ------------------------------------------------------------ Weyl group

static void require_weyl(bool ok) {
  if (!ok)
    throw WeylTooLarge(
        "Weyl group too large to enumerate; only root-level data is available for this datum");
}

Int RootDatum::weyl_order() const { return weyl_order_; }

int RootDatum::weyl_size() const {
  require_weyl(weyl_available_);
  return static_cast<int>(weyl_.size());
}

int RootDatum::weyl_w0() const {
  require_weyl(weyl_available_);
  return w0_;
}

int RootDatum::weyl_mul(int a, int b) const {
  require_weyl(weyl_available_);
  MatZ m = mat_mul(weyl_[a].on_coweights, weyl_[b].on_coweights);
  return weyl_index_.at(m);
}

int RootDatum::weyl_inverse(int a) const {
  require_weyl(weyl_available_);
  return weyl_[a].inverse;
}

int RootDatum::weyl_length(int a) const {
  require_weyl(weyl_available_);
  return weyl_[a].length;
}

const std::vector<int>& RootDatum::weyl_word(int a) const {
  require_weyl(weyl_available_);
  return weyl_[a].word;
}

int RootDatum::weyl_simple_reflection(int i) const {
  require_weyl(weyl_available_);
  if (i < 0 || i >= num_simple()) throw BadGeneratorIndex("simple index out of range");
  return weyl_left_[i][0];
}

int RootDatum::weyl_reflection(int posroot_index) const {
  require_weyl(weyl_available_);
  return reflection_of_posroot_.at(posroot_index);
}

VecZ RootDatum::weyl_act_coweight(int w, const VecZ& v) const {
  require_weyl(weyl_available_);
  return mat_apply(weyl_[w].on_coweights, v);
}

VecZ RootDatum::weyl_act_weight(int w, const VecZ& x) const {
  require_weyl(weyl_available_);
  return mat_apply(weyl_[w].on_weights, x);
}

VecQ RootDatum::weyl_act_coweight_q(int w, const VecQ& v) const {
  require_weyl(weyl_available_);
  const MatZ& m = weyl_[w].on_coweights;
  VecQ r(rank_, Rat(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (m[i][j] != 0) r[i] = r[i] + Rat(m[i][j]) * v[j];
  return r;
}

// ------------------------------------------------------------- dominance

bool RootDatum::is_dominant(const VecZ& coweight) const {
  for (int i = 0; i < num_simple(); ++i)
    if (dot(coweight, simple_roots_[i]) < 0) return false;
  return true;
}

bool RootDatum::is_strictly_dominant(const VecZ& coweight) const {
  for (const auto& alpha : pos_roots_)
    if (dot(coweight, alpha) <= 0) return false;
  return true;
}

bool RootDatum::dominance_leq(const VecZ& lambda, const VecZ& mu) const {
  VecZ diff = vec_sub(mu, lambda);
  if (vec_is_zero(diff)) return true;
  // solve sum_i c_i alpha_i^vee = diff; need integral c_i >= 0
  MatZ a(rank_, VecZ(num_simple(), 0));
  for (int j = 0; j < num_simple(); ++j)
    for (int i = 0; i < rank_; ++i) a[i][j] = simple_coroots_[j][i];
  auto sol = solve_rational(a, diff);
  if (!sol) return false;
  for (const Rat& c : *sol)
    if (!c.is_integer() || c.num < 0) return false;
  return true;
}

VecZ RootDatum::dominant_conjugate(const VecZ& coweight) const {
  return dominant_conjugate_with_witness(coweight).first;
}

std::pair<VecZ, int> RootDatum::dominant_conjugate_with_witness(const VecZ& coweight) const {
  require_weyl(weyl_available_);
  VecZ v = coweight;
  int w = 0;
  for (;;) {
    int i = -1;
    for (int s = 0; s < num_simple(); ++s)
      if (dot(v, simple_roots_[s]) < 0) {
        i = s;
        break;
      }
    if (i < 0) return {v, w};
    v = vec_sub(v, vec_scale(dot(v, simple_roots_[i]), simple_coroots_[i]));
    w = weyl_left_[i][w];
  }
}

std::set<Int> RootDatum::bad_primes() const {
  std::set<Int> s;
  for (const auto& c : components_) s.insert(c.bad_primes.begin(), c.bad_primes.end());
  return s;
}

bool RootDatum::is_good_prime(Int p) const { return !bad_primes().count(p); }

Int RootDatum::coxeter_number_max() const {
  Int h = 1;  // a torus has Coxeter number 1 by convention
  for (const auto& c : components_) h = std::max(h, c.coxeter_number);
  return h;
}

}  // namespace alc
