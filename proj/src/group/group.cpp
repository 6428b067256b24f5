#include "ccl/group/group.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "ccl/core/error.hpp"

namespace ccl {

GroupSpec GroupSpec::free(int rank, std::vector<std::string> names) {
  GroupSpec s;
  s.kind = Kind::Free;
  s.rank = rank;
  s.names = std::move(names);
  return s;
}

GroupSpec GroupSpec::free_abelian(int rank, std::vector<std::string> names) {
  GroupSpec s;
  s.kind = Kind::FreeAbelian;
  s.rank = rank;
  s.names = std::move(names);
  return s;
}

GroupSpec GroupSpec::cyclic(int order, std::string name) {
  GroupSpec s;
  s.kind = Kind::Cyclic;
  s.order = order;
  s.names = {std::move(name)};
  return s;
}

GroupSpec GroupSpec::direct_product(std::vector<GroupSpec> factors) {
  GroupSpec s;
  s.kind = Kind::DirectProduct;
  s.factors = std::move(factors);
  return s;
}

GroupSpec GroupSpec::free_product(std::vector<GroupSpec> factors) {
  GroupSpec s;
  s.kind = Kind::FreeProduct;
  s.factors = std::move(factors);
  return s;
}

Element Group::power(const Element& a, std::int64_t k) const {
  Element base = k < 0 ? inverse(a) : a;
  Element out = identity();
  for (std::int64_t i = 0; i < std::llabs(k); ++i) out = multiply(out, base);
  return out;
}

Element Group::parse_word(std::string_view word) const {
  Element out = identity();
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == '*' || c == ' ' || c == '\t'; };
  while (i < word.size()) {
    if (is_sep(word[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < word.size() && !is_sep(word[j])) ++j;
    std::string_view tok = word.substr(i, j - i);
    i = j;
    if (tok == "1") continue;
    std::string_view name = tok;
    std::int64_t exp = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      name = tok.substr(0, caret);
      auto digits = tok.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exp);
      if (ec != std::errc{} || ptr != digits.data() + digits.size())
        throw Error(ErrorCode::FormatError, "bad exponent in word '" + std::string(word) + "'");
    }
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
      throw Error(ErrorCode::FormatError, "unknown generator '" + std::string(name) + "'");
    out = multiply(out, power(generator(static_cast<std::size_t>(it - names_.begin())), exp));
  }
  return out;
}

GenMask Group::mask(const Subgroup& h) const {
  GenMask m(names_.size(), false);
  for (const auto& g : h.generators) {
    auto it = std::find(names_.begin(), names_.end(), g);
    if (it == names_.end())
      throw Error(ErrorCode::UnsupportedGroup,
                  "subgroup " + h.name + " uses '" + g + "', which is not a standard generator");
    m[static_cast<std::size_t>(it - names_.begin())] = true;
  }
  return m;
}

namespace {

std::string power_str(const std::string& name, std::int64_t k) {
  if (k == 1) return name;
  return name + "^" + std::to_string(k);
}

std::string join(const std::vector<std::string>& parts) {
  if (parts.empty()) return "1";
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += '*';
    out += p;
  }
  return out;
}

std::vector<std::string> default_names(std::size_t n, std::string_view pool) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(i < pool.size() ? std::string(1, pool[i]) : std::string(1, pool[0]) + std::to_string(i + 1));
  return out;
}

class FreeGroup final : public Group {
 public:
  FreeGroup(int rank, std::vector<std::string> names) {
    names_ = names.empty() ? default_names(rank, "abcdefgh") : std::move(names);
  }
  Element identity() const override { return {}; }
  Element multiply(const Element& a, const Element& b) const override {
    Element out = a;
    for (auto x : b) {
      if (!out.empty() && out.back() == -x)
        out.pop_back();
      else
        out.push_back(x);
    }
    return out;
  }
  Element inverse(const Element& a) const override {
    Element out(a.rbegin(), a.rend());
    for (auto& x : out) x = -x;
    return out;
  }
  std::string format(const Element& a) const override {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < a.size();) {
      std::size_t j = i;
      while (j < a.size() && a[j] == a[i]) ++j;
      std::int64_t k = static_cast<std::int64_t>(j - i) * (a[i] > 0 ? 1 : -1);
      parts.push_back(power_str(names_[static_cast<std::size_t>(std::llabs(a[i]) - 1)], k));
      i = j;
    }
    return join(parts);
  }
  Element generator(std::size_t i) const override { return {static_cast<std::int64_t>(i + 1)}; }
  std::int64_t word_length(const Element& a) const override { return static_cast<std::int64_t>(a.size()); }
  bool in_subgroup(const GenMask& mask, const Element& a) const override {
    return std::all_of(a.begin(), a.end(), [&](auto x) { return mask[std::llabs(x) - 1]; });
  }
  Element coset_rep(const GenMask& mask, const Element& a) const override {
    Element out = a;
    while (!out.empty() && mask[std::llabs(out.back()) - 1]) out.pop_back();
    return out;
  }
};

class FreeAbelianGroup final : public Group {
 public:
  FreeAbelianGroup(int rank, std::vector<std::string> names) : rank_(rank) {
    names_ = names.empty() ? default_names(rank, "xyzw") : std::move(names);
  }
  Element identity() const override { return Element(rank_, 0); }
  Element multiply(const Element& a, const Element& b) const override {
    Element out(rank_);
    for (std::size_t i = 0; i < rank_; ++i) out[i] = a[i] + b[i];
    return out;
  }
  Element inverse(const Element& a) const override {
    Element out(a);
    for (auto& x : out) x = -x;
    return out;
  }
  std::string format(const Element& a) const override {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < rank_; ++i)
      if (a[i] != 0) parts.push_back(power_str(names_[i], a[i]));
    return join(parts);
  }
  Element generator(std::size_t i) const override {
    Element e(rank_, 0);
    e[i] = 1;
    return e;
  }
  std::int64_t word_length(const Element& a) const override {
    std::int64_t s = 0;
    for (auto x : a) s += std::llabs(x);
    return s;
  }
  bool in_subgroup(const GenMask& mask, const Element& a) const override {
    for (std::size_t i = 0; i < rank_; ++i)
      if (!mask[i] && a[i] != 0) return false;
    return true;
  }
  Element coset_rep(const GenMask& mask, const Element& a) const override {
    Element out(a);
    for (std::size_t i = 0; i < rank_; ++i)
      if (mask[i]) out[i] = 0;
    return out;
  }

 private:
  std::size_t rank_;
};

class CyclicGroup final : public Group {
 public:
  CyclicGroup(int order, std::vector<std::string> names) : order_(order) {
    names_ = names.empty() ? std::vector<std::string>{"c"} : std::move(names);
  }
  Element identity() const override { return {0}; }
  Element multiply(const Element& a, const Element& b) const override { return {(a[0] + b[0]) % order_}; }
  Element inverse(const Element& a) const override { return {(order_ - a[0]) % order_}; }
  std::string format(const Element& a) const override {
    return a[0] == 0 ? "1" : power_str(names_[0], a[0]);
  }
  Element generator(std::size_t) const override { return {1 % order_}; }
  std::int64_t word_length(const Element& a) const override { return std::min(a[0], order_ - a[0]); }
  bool in_subgroup(const GenMask& mask, const Element& a) const override { return mask[0] || a[0] == 0; }
  Element coset_rep(const GenMask& mask, const Element& a) const override { return mask[0] ? Element{0} : a; }

 private:
  std::int64_t order_;
};

class DirectProductGroup final : public Group {
 public:
  explicit DirectProductGroup(std::vector<std::shared_ptr<const Group>> factors) : factors_(std::move(factors)) {
    for (const auto& f : factors_) {
      offsets_.push_back(names_.size());
      for (const auto& n : f->generator_names()) names_.push_back(n);
    }
    offsets_.push_back(names_.size());
  }
  Element identity() const override {
    std::vector<Element> parts;
    for (const auto& f : factors_) parts.push_back(f->identity());
    return pack(parts);
  }
  Element multiply(const Element& a, const Element& b) const override {
    auto pa = unpack(a), pb = unpack(b);
    for (std::size_t i = 0; i < factors_.size(); ++i) pa[i] = factors_[i]->multiply(pa[i], pb[i]);
    return pack(pa);
  }
  Element inverse(const Element& a) const override {
    auto pa = unpack(a);
    for (std::size_t i = 0; i < factors_.size(); ++i) pa[i] = factors_[i]->inverse(pa[i]);
    return pack(pa);
  }
  std::string format(const Element& a) const override {
    auto pa = unpack(a);
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      if (!factors_[i]->is_identity(pa[i])) parts.push_back(factors_[i]->format(pa[i]));
    return join(parts);
  }
  Element generator(std::size_t i) const override {
    std::vector<Element> parts;
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      bool mine = offsets_[f] <= i && i < offsets_[f + 1];
      parts.push_back(mine ? factors_[f]->generator(i - offsets_[f]) : factors_[f]->identity());
    }
    return pack(parts);
  }
  std::int64_t word_length(const Element& a) const override {
    auto pa = unpack(a);
    std::int64_t s = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) s += factors_[i]->word_length(pa[i]);
    return s;
  }
  bool in_subgroup(const GenMask& mask, const Element& a) const override {
    auto pa = unpack(a);
    for (std::size_t i = 0; i < factors_.size(); ++i)
      if (!factors_[i]->in_subgroup(sub(mask, i), pa[i])) return false;
    return true;
  }
  Element coset_rep(const GenMask& mask, const Element& a) const override {
    auto pa = unpack(a);
    for (std::size_t i = 0; i < factors_.size(); ++i) pa[i] = factors_[i]->coset_rep(sub(mask, i), pa[i]);
    return pack(pa);
  }

 private:
  GenMask sub(const GenMask& m, std::size_t i) const {
    return GenMask(m.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
                   m.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
  }
  static Element pack(const std::vector<Element>& parts) {
    Element out;
    for (const auto& p : parts) {
      out.push_back(static_cast<std::int64_t>(p.size()));
      out.insert(out.end(), p.begin(), p.end());
    }
    return out;
  }
  std::vector<Element> unpack(const Element& a) const {
    std::vector<Element> parts;
    std::size_t i = 0;
    while (i < a.size()) {
      auto len = static_cast<std::size_t>(a[i]);
      parts.emplace_back(a.begin() + static_cast<std::ptrdiff_t>(i + 1),
                         a.begin() + static_cast<std::ptrdiff_t>(i + 1 + len));
      i += len + 1;
    }
    return parts;
  }

  std::vector<std::shared_ptr<const Group>> factors_;
  std::vector<std::size_t> offsets_;
};

}  // namespace

FreeProductGroup::FreeProductGroup(std::vector<std::shared_ptr<const Group>> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    offsets_.push_back(names_.size());
    for (const auto& n : f->generator_names()) {
      if (std::find(names_.begin(), names_.end(), n) != names_.end())
        throw Error(ErrorCode::UnsupportedGroup, "free product factors share generator name '" + n + "'");
      names_.push_back(n);
    }
  }
  offsets_.push_back(names_.size());
}

std::vector<FreeProductGroup::Syllable> FreeProductGroup::syllables(const Element& a) const {
  std::vector<Syllable> out;
  std::size_t i = 0;
  while (i < a.size()) {
    auto f = static_cast<std::size_t>(a[i]);
    auto len = static_cast<std::size_t>(a[i + 1]);
    out.push_back({f, Element(a.begin() + static_cast<std::ptrdiff_t>(i + 2),
                              a.begin() + static_cast<std::ptrdiff_t>(i + 2 + len))});
    i += len + 2;
  }
  return out;
}

Element FreeProductGroup::from_syllables(const std::vector<Syllable>& s) const {
  Element out;
  for (const auto& syl : s) {
    out.push_back(static_cast<std::int64_t>(syl.factor));
    out.push_back(static_cast<std::int64_t>(syl.local.size()));
    out.insert(out.end(), syl.local.begin(), syl.local.end());
  }
  return out;
}

Element FreeProductGroup::embed(std::size_t factor, const Element& local) const {
  if (factors_[factor]->is_identity(local)) return {};
  return from_syllables({{factor, local}});
}

Element FreeProductGroup::multiply(const Element& a, const Element& b) const {
  auto sa = syllables(a);
  auto sb = syllables(b);
  std::size_t j = 0;
  while (!sa.empty() && j < sb.size() && sa.back().factor == sb[j].factor) {
    const Group& f = *factors_[sb[j].factor];
    Element merged = f.multiply(sa.back().local, sb[j].local);
    ++j;
    if (f.is_identity(merged)) {
      sa.pop_back();
    } else {
      sa.back().local = std::move(merged);
      break;
    }
  }
  sa.insert(sa.end(), sb.begin() + static_cast<std::ptrdiff_t>(j), sb.end());
  return from_syllables(sa);
}

Element FreeProductGroup::inverse(const Element& a) const {
  auto s = syllables(a);
  std::reverse(s.begin(), s.end());
  for (auto& syl : s) syl.local = factors_[syl.factor]->inverse(syl.local);
  return from_syllables(s);
}

std::string FreeProductGroup::format(const Element& a) const {
  std::vector<std::string> parts;
  for (const auto& syl : syllables(a)) parts.push_back(factors_[syl.factor]->format(syl.local));
  return join(parts);
}

Element FreeProductGroup::generator(std::size_t i) const {
  for (std::size_t f = 0; f < factors_.size(); ++f)
    if (offsets_[f] <= i && i < offsets_[f + 1]) return embed(f, factors_[f]->generator(i - offsets_[f]));
  throw Error(ErrorCode::FormatError, "generator index out of range");
}

std::int64_t FreeProductGroup::word_length(const Element& a) const {
  std::int64_t s = 0;
  for (const auto& syl : syllables(a)) s += factors_[syl.factor]->word_length(syl.local);
  return s;
}

GenMask FreeProductGroup::factor_mask(const GenMask& mask, std::size_t i) const {
  return GenMask(mask.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
                 mask.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
}

bool FreeProductGroup::in_subgroup(const GenMask& mask, const Element& a) const {
  for (const auto& syl : syllables(a))
    if (!factors_[syl.factor]->in_subgroup(factor_mask(mask, syl.factor), syl.local)) return false;
  return true;
}

Element FreeProductGroup::coset_rep(const GenMask& mask, const Element& a) const {
  // H is the free product of the per-factor subgroups: strip trailing
  // syllables lying in H, then reduce the last syllable modulo its factor's
  // subgroup
  auto s = syllables(a);
  while (!s.empty() && factors_[s.back().factor]->in_subgroup(factor_mask(mask, s.back().factor), s.back().local))
    s.pop_back();
  if (!s.empty()) {
    auto& last = s.back();
    last.local = factors_[last.factor]->coset_rep(factor_mask(mask, last.factor), last.local);
  }
  return from_syllables(s);
}

std::pair<Element, Element> FreeProductGroup::split_last(const Element& a, std::size_t factor) const {
  auto s = syllables(a);
  Element local = factors_[factor]->identity();
  if (!s.empty() && s.back().factor == factor) {
    local = s.back().local;
    s.pop_back();
  }
  return {from_syllables(s), local};
}

std::shared_ptr<const Group> make_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::Free:
      if (spec.rank < 1) throw Error(ErrorCode::UnsupportedGroup, "free group needs rank >= 1");
      if (!spec.names.empty() && spec.names.size() != static_cast<std::size_t>(spec.rank))
        throw Error(ErrorCode::UnsupportedGroup, "generator name count differs from rank");
      return std::make_shared<FreeGroup>(spec.rank, spec.names);
    case GroupSpec::Kind::FreeAbelian:
      if (spec.rank < 1) throw Error(ErrorCode::UnsupportedGroup, "free abelian group needs rank >= 1");
      if (!spec.names.empty() && spec.names.size() != static_cast<std::size_t>(spec.rank))
        throw Error(ErrorCode::UnsupportedGroup, "generator name count differs from rank");
      return std::make_shared<FreeAbelianGroup>(spec.rank, spec.names);
    case GroupSpec::Kind::Cyclic:
      if (spec.order < 1) throw Error(ErrorCode::UnsupportedGroup, "cyclic group needs order >= 1");
      return std::make_shared<CyclicGroup>(spec.order, spec.names);
    case GroupSpec::Kind::DirectProduct:
    case GroupSpec::Kind::FreeProduct: {
      if (spec.factors.empty()) throw Error(ErrorCode::UnsupportedGroup, "product without factors");
      std::vector<std::shared_ptr<const Group>> fs;
      std::vector<std::string> seen;
      for (const auto& f : spec.factors) {
        fs.push_back(make_group(f));
        for (const auto& n : fs.back()->generator_names()) {
          if (std::find(seen.begin(), seen.end(), n) != seen.end())
            throw Error(ErrorCode::UnsupportedGroup, "factors share generator name '" + n + "'");
          seen.push_back(n);
        }
      }
      if (spec.kind == GroupSpec::Kind::DirectProduct) return std::make_shared<DirectProductGroup>(std::move(fs));
      return std::make_shared<FreeProductGroup>(std::move(fs));
    }
  }
  throw Error(ErrorCode::UnsupportedGroup, "unknown group kind");
}

}  // namespace ccl
