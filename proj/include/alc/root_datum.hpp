#ifndef ALC_ROOT_DATUM_HPP
#define ALC_ROOT_DATUM_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "alc/numeric.hpp"

/*
  Based root data given by explicit simple root / coroot coordinate vectors
  in Z^d with the standard dot pairing X_vee x X -> Z, together with derived
  data: the positive (co)root closure, 2*rho and 2*rho_vee (doubled so they
  stay integral), the finite Weyl group with one lex-least reduced word per
  element, Cartan-type classification per irreducible component, Coxeter
  numbers and bad primes.

  Coweights are plain integer coordinate vectors (VecZ); the Weyl group acts
  on them through cached integer matrices.
*/

namespace alc {

class RootDatum {
 public:
  struct Component {
    std::string type;          // "A", "B", "C", "D", "E", "F", "G"
    int type_rank = 0;         // the n in A_n, ...
    std::vector<int> nodes;    // simple indices, preset order
    VecZ highest_root;         // in X coordinates
    VecZ highest_coroot;       // coroot paired with highest_root
    int affine_generator = 0;  // index into S_aff (filled by AffineWeylGroup)
    Int coxeter_number = 0;    // 1 + height of the highest root
    std::set<Int> bad_primes;
  };

  static std::shared_ptr<const RootDatum> preset(const std::string& name);
  static std::shared_ptr<const RootDatum> build(int rank,
                                                std::vector<VecZ> simple_roots,
                                                std::vector<VecZ> simple_coroots,
                                                std::string name = "custom");
  static std::shared_ptr<const RootDatum> from_json(const nlohmann::json& j);
  static std::vector<std::string> preset_names();

  int rank() const { return rank_; }
  int num_simple() const { return static_cast<int>(simple_roots_.size()); }
  const std::string& name() const { return name_; }

  const VecZ& simple_root(int i) const { return simple_roots_[i]; }
  const VecZ& simple_coroot(int i) const { return simple_coroots_[i]; }
  // Paired lists: positive_coroot(i) is the coroot of positive_root(i);
  // sorted by (height, lex), simple roots first within each height.
  const std::vector<VecZ>& positive_roots() const { return pos_roots_; }
  const std::vector<VecZ>& positive_coroots() const { return pos_coroots_; }
  int num_positive_roots() const { return static_cast<int>(pos_roots_.size()); }

  // <coweight, weight> under the standard dot pairing.
  Int pair(const VecZ& coweight, const VecZ& weight) const { return dot(coweight, weight); }

  const VecZ& two_rho() const { return two_rho_; }             // in X
  const VecZ& two_rho_check() const { return two_rho_check_; } // in X_vee

  const std::vector<Component>& components() const { return components_; }
  std::set<Int> bad_primes() const;
  bool is_good_prime(Int p) const;
  Int coxeter_number_max() const;

  // ---- finite Weyl group (enumerated eagerly up to kWeylEnumerationCap) ----
  static constexpr Int kWeylEnumerationCap = 100000;
  bool weyl_enumerated() const { return weyl_available_; }
  Int weyl_order() const;                 // known even when not enumerated
  int weyl_size() const;                  // enumerated size; throws if unavailable
  int weyl_identity() const { return 0; }
  int weyl_w0() const;
  int weyl_mul(int a, int b) const;
  int weyl_inverse(int a) const;
  int weyl_length(int a) const;
  const std::vector<int>& weyl_word(int a) const;  // lex-least reduced word
  int weyl_simple_reflection(int i) const;
  VecZ weyl_act_coweight(int w, const VecZ& v) const;
  VecZ weyl_act_weight(int w, const VecZ& x) const;
  VecQ weyl_act_coweight_q(int w, const VecQ& v) const;
  // index of the reflection s_beta for a positive root (by R_+ index)
  int weyl_reflection(int posroot_index) const;

  // ---- dominance ----
  bool is_dominant(const VecZ& coweight) const;
  bool is_strictly_dominant(const VecZ& coweight) const;
  // lambda <= mu in dominance order: mu - lambda a Z_{>=0}-combination of
  // simple coroots, decided exactly.
  bool dominance_leq(const VecZ& lambda, const VecZ& mu) const;
  VecZ dominant_conjugate(const VecZ& coweight) const;
  // also reports a Weyl element with w(lambda) dominant
  std::pair<VecZ, int> dominant_conjugate_with_witness(const VecZ& coweight) const;

  nlohmann::json to_json() const;

 private:
  RootDatum() = default;
  void derive();      // closure, components, rho's, Weyl enumeration
  void classify();    // Cartan type per component, bad primes, h
  void enumerate_weyl();

  int rank_ = 0;
  std::string name_;
  std::vector<VecZ> simple_roots_, simple_coroots_;
  std::vector<VecZ> pos_roots_, pos_coroots_;
  std::vector<VecZ> pos_root_simple_coords_;  // coefficients on simple roots
  VecZ two_rho_, two_rho_check_;
  std::vector<Component> components_;
  std::vector<int> node_component_;  // simple index -> component index

  // Weyl group storage
  bool weyl_available_ = false;
  Int weyl_order_ = 1;
  struct WeylElt {
    MatZ on_coweights;  // action on X_vee
    MatZ on_weights;    // action on X
    int length = 0;
    int inverse = 0;
    std::vector<int> word;
  };
  std::vector<WeylElt> weyl_;
  std::map<MatZ, int> weyl_index_;            // on_coweights matrix -> index
  std::vector<std::vector<int>> weyl_left_;   // [gen][elt] -> s_gen * elt
  int w0_ = 0;
  std::vector<int> reflection_of_posroot_;
};

}  // namespace alc

#endif
