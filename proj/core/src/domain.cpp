#include <wsieve/domain.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wsieve {

ValuedDomain::ValuedDomain(const PrimeModulus& p, std::vector<Item> items)
    : p_(p), items_(std::move(items)) {
  std::sort(items_.begin(), items_.end(),
            [](const Item& a, const Item& b) { return a.value < b.value; });
  bool all_units = true;
  for (size_t i = 0; i < items_.size(); ++i) {
    const Item& it = items_[i];
    if (it.value >= p.value()) {
      throw std::invalid_argument("domain value " + std::to_string(it.value) +
                                  " out of range for p=" + std::to_string(p.value()));
    }
    if (it.multiplicity == 0) {
      throw std::invalid_argument("domain multiplicities must be positive");
    }
    if (i > 0 && items_[i - 1].value == it.value) {
      throw std::invalid_argument("domain values must be distinct (repeated " +
                                  std::to_string(it.value) + ")");
    }
    if (it.value == 0 || it.multiplicity != 1) all_units = false;
    n_ += it.multiplicity;
  }
  subset_of_units_ = all_units && n_ <= p.value() - 1;
}

ValuedDomain ValuedDomain::units(const PrimeModulus& p) {
  std::vector<Item> items;
  items.reserve(p.value() - 1);
  for (uint64_t x = 1; x < p.value(); ++x) items.push_back({x, 1});
  return ValuedDomain(p, std::move(items));
}

ValuedDomain ValuedDomain::from_values(const PrimeModulus& p,
                                       const std::vector<uint64_t>& values) {
  std::vector<Item> items;
  items.reserve(values.size());
  for (uint64_t v : values) items.push_back({v, 1});
  return ValuedDomain(p, std::move(items));
}

ValuedDomain ValuedDomain::from_items(const PrimeModulus& p, std::vector<Item> items) {
  return ValuedDomain(p, std::move(items));
}

ValuedDomain ValuedDomain::power_instance(const PowerResidueStructure& h) {
  std::vector<Item> items;
  items.reserve(h.members.size());
  for (uint64_t member : h.members) items.push_back({member, h.d});
  return ValuedDomain(h.p, std::move(items));
}

uint64_t ValuedDomain::multiplicity_of(uint64_t value) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), value,
                             [](const Item& a, uint64_t v) { return a.value < v; });
  if (it != items_.end() && it->value == value) return it->multiplicity;
  return 0;
}

ValuedDomain random_unit_subset(const PrimeModulus& p, SplitMix64& rng) {
  std::vector<uint64_t> values;
  for (;;) {
    values.clear();
    for (uint64_t x = 1; x < p.value(); ++x) {
      if (rng.coin()) values.push_back(x);
    }
    if (!values.empty()) break;
  }
  return ValuedDomain::from_values(p, values);
}

}  // namespace wsieve
