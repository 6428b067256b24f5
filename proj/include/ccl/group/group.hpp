#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ccl {

// Canonical normal form of a group element, encoded as integers. The
// encoding depends on the group; equal elements have equal encodings.
using Element = std::vector<std::int64_t>;

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ e.size();
    for (auto x : e) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL + (h >> 29);
    return h;
  }
};

struct GroupSpec {
  enum class Kind { Free, FreeAbelian, Cyclic, DirectProduct, FreeProduct };
  Kind kind = Kind::Free;
  int rank = 0;   // Free, FreeAbelian
  int order = 0;  // Cyclic
  std::vector<std::string> names;  // generator names of a leaf; defaults filled in by make_group
  std::vector<GroupSpec> factors;  // DirectProduct, FreeProduct

  static GroupSpec free(int rank, std::vector<std::string> names = {});
  static GroupSpec free_abelian(int rank, std::vector<std::string> names = {});
  static GroupSpec cyclic(int order, std::string name = "c");
  static GroupSpec direct_product(std::vector<GroupSpec> factors);
  static GroupSpec free_product(std::vector<GroupSpec> factors);
};

// Subgroup generated by some of the standard generators, by name.
struct Subgroup {
  std::string name;
  std::vector<std::string> generators;
};

// mask over the group's standard generators
using GenMask = std::vector<bool>;

class Group {
 public:
  virtual ~Group() = default;

  virtual Element identity() const = 0;
  virtual Element multiply(const Element& a, const Element& b) const = 0;
  virtual Element inverse(const Element& a) const = 0;
  virtual std::string format(const Element& a) const = 0;
  virtual Element generator(std::size_t i) const = 0;
  // length in the standard generators
  virtual std::int64_t word_length(const Element& a) const = 0;
  virtual bool in_subgroup(const GenMask& mask, const Element& a) const = 0;
  // canonical representative of the left coset a·H
  virtual Element coset_rep(const GenMask& mask, const Element& a) const = 0;

  const std::vector<std::string>& generator_names() const { return names_; }
  bool is_identity(const Element& a) const { return a == identity(); }
  Element power(const Element& a, std::int64_t k) const;
  // words like "a*b^-1*z^2", "a b^2" or "1"
  Element parse_word(std::string_view word) const;
  GenMask mask(const Subgroup& h) const;
  GenMask trivial_mask() const { return GenMask(names_.size(), false); }

 protected:
  std::vector<std::string> names_;
};

std::shared_ptr<const Group> make_group(const GroupSpec& spec);

// Free product with access to syllables, used by the splitting constructions.
class FreeProductGroup : public Group {
 public:
  explicit FreeProductGroup(std::vector<std::shared_ptr<const Group>> factors);

  Element identity() const override { return {}; }
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  std::string format(const Element& a) const override;
  Element generator(std::size_t i) const override;
  std::int64_t word_length(const Element& a) const override;
  bool in_subgroup(const GenMask& mask, const Element& a) const override;
  Element coset_rep(const GenMask& mask, const Element& a) const override;

  struct Syllable {
    std::size_t factor;
    Element local;
  };
  std::vector<Syllable> syllables(const Element& a) const;
  Element from_syllables(const std::vector<Syllable>& s) const;
  Element embed(std::size_t factor, const Element& local) const;
  // a = prefix * embed(factor, local) with prefix not ending in that factor
  std::pair<Element, Element> split_last(const Element& a, std::size_t factor) const;
  const Group& factor(std::size_t i) const { return *factors_[i]; }
  std::size_t factor_count() const { return factors_.size(); }
  std::size_t factor_offset(std::size_t i) const { return offsets_[i]; }
  // restrict a mask on this group's generators to factor i
  GenMask factor_mask(const GenMask& mask, std::size_t i) const;

 private:
  std::vector<std::shared_ptr<const Group>> factors_;
  std::vector<std::size_t> offsets_;
};

}  // namespace ccl
