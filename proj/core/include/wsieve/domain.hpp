#pragma once

#include <wsieve/field.hpp>
#include <wsieve/rng.hpp>

#include <cstdint>
#include <vector>

namespace wsieve {

// A multiset of residues mod p: distinct values, each with a positive
// multiplicity, kept sorted by value. n is the slot count (total
// multiplicity); "k-subsets" always means k-subsets of slots.
//
// The m-th power instance is the multiset (h, d) for h in H: each h stands
// for its d preimages in F_p^*, so slot subsets of this domain are exactly
// subsets of F_p^* read through x -> x^m.
class ValuedDomain {
 public:
  struct Item {
    uint64_t value;
    uint64_t multiplicity;
  };

  // F_p^* with every multiplicity 1.
  static ValuedDomain units(const PrimeModulus& p);

  // Distinct residues, multiplicity 1 each. Values must lie in [0, p).
  static ValuedDomain from_values(const PrimeModulus& p,
                                  const std::vector<uint64_t>& values);

  // Arbitrary items; values must be distinct residues, multiplicities >= 1.
  static ValuedDomain from_items(const PrimeModulus& p, std::vector<Item> items);

  // The (h, d) multiset described above.
  static ValuedDomain power_instance(const PowerResidueStructure& h);

  const PrimeModulus& modulus() const { return p_; }
  const std::vector<Item>& items() const { return items_; }
  uint64_t size() const { return n_; }  // n = sum of multiplicities
  bool empty() const { return items_.empty(); }
  bool subset_of_units() const { return subset_of_units_; }
  uint64_t multiplicity_of(uint64_t value) const;

 private:
  ValuedDomain(const PrimeModulus& p, std::vector<Item> items);

  PrimeModulus p_;
  std::vector<Item> items_;
  uint64_t n_ = 0;
  bool subset_of_units_ = false;
};

// Seeded nonempty random subset of F_p^* (all multiplicities 1).
ValuedDomain random_unit_subset(const PrimeModulus& p, SplitMix64& rng);

}  // namespace wsieve
