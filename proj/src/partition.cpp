#include "wreath/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace wreath {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  std::vector<int> out(parts_.empty() ? 0 : parts_.front(), 0);
  for (int part : parts_)
    for (int j = 0; j < part; ++j) ++out[j];
  return Partition(std::move(out));
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

MultiPartition::MultiPartition(std::vector<Partition> components)
    : MultiPartition(std::move(components), Indexing::FullP, 0) {}

MultiPartition::MultiPartition(std::vector<Partition> components, Indexing indexing, int p)
    : components_(std::move(components)), indexing_(indexing), p_(p) {
  if (p_ != 0) {
    const int expected = indexing_ == Indexing::FullP ? p_ : p_ - 1;
    if (length() != expected)
      throw std::invalid_argument("multipartition has " + std::to_string(length()) +
                                  " components, expected " + std::to_string(expected));
  }
  for (const auto& c : components_) size_ += c.size();
}

const Partition& MultiPartition::at_position(int position) const {
  if (indexing_ == Indexing::FullP) return components_.at(position - 1);
  const int r = middle_index(p_);
  if (position == r) throw std::out_of_range("position r is not in I");
  return components_.at(position < r ? position - 1 : position - 2);
}

std::string MultiPartition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ',';
    out += components_[i].to_string();
  }
  return out + "]";
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_odd_prime(int p) {
  if (p == 2 || !is_prime(p))
    throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> generate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("generate_partitions: n < 0");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

std::vector<MultiPartition> generate_multipartitions(int w, int t) {
  if (w < 0 || t < 1) throw std::invalid_argument("generate_multipartitions: need w >= 0, t >= 1");
  std::vector<std::vector<Partition>> by_size(w + 1);
  for (int k = 0; k <= w; ++k) by_size[k] = generate_partitions(k);

  std::vector<MultiPartition> out;
  std::vector<Partition> current;
  std::function<void(int, int)> rec = [&](int slot, int remaining) {
    if (slot == t - 1) {
      for (const auto& part : by_size[remaining]) {
        current.push_back(part);
        out.emplace_back(current);
        current.pop_back();
      }
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      for (const auto& part : by_size[k]) {
        current.push_back(part);
        rec(slot + 1, remaining - k);
        current.pop_back();
      }
    }
  };
  rec(0, w);
  return out;
}

std::vector<std::vector<int>> hook_lengths(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  std::vector<std::vector<int>> hooks(lambda.length());
  for (int i = 0; i < lambda.length(); ++i) {
    hooks[i].resize(lambda[i]);
    for (int j = 0; j < lambda[i]; ++j) hooks[i][j] = (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
  }
  return hooks;
}

std::vector<int> beta_set(const Partition& lambda, int count) {
  if (count < lambda.length()) throw std::invalid_argument("beta_set: count too small");
  std::vector<int> beta(count);
  for (int i = 0; i < count; ++i) beta[i] = lambda[i] + count - 1 - i;
  return beta;
}

Partition from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int count = static_cast<int>(beta.size());
  std::vector<int> parts(count);
  for (int i = 0; i < count; ++i) {
    parts[i] = beta[i] - (count - 1 - i);
    if (parts[i] < 0 || (i > 0 && beta[i] == beta[i - 1]))
      throw std::invalid_argument("from_beta_set: entries must be distinct and nonnegative");
  }
  return Partition(std::move(parts));
}

bool is_p_core(const Partition& lambda, int p) {
  for (const auto& row : hook_lengths(lambda))
    for (int h : row)
      if (h % p == 0) return false;
  return true;
}

namespace {

int padded_bead_count(const Partition& lambda, int p) {
  return (lambda.length() + p - 1) / p * p;
}

}  // namespace

PQuotientResult p_core_and_quotient(const Partition& lambda, int p) {
  require_odd_prime(p);
  const int count = padded_bead_count(lambda, p);
  const std::vector<int> beta = beta_set(lambda, count);

  std::vector<std::vector<int>> runners(p);  // bead levels per runner
  for (int b : beta) runners[b % p].push_back(b / p);

  std::vector<Partition> quotient;
  std::vector<int> core_beta;
  int weight = 0;
  for (int q = 0; q < p; ++q) {
    quotient.push_back(from_beta_set(runners[q]));
    weight += quotient.back().size();
    for (int level = 0; level < static_cast<int>(runners[q].size()); ++level)
      core_beta.push_back(level * p + q);
  }
  return {from_beta_set(std::move(core_beta)),
          MultiPartition(std::move(quotient), Indexing::FullP, p), weight};
}

Partition reconstruct_from_core_quotient(const Partition& core, const MultiPartition& quotient,
                                         int p) {
  require_odd_prime(p);
  if (quotient.length() != p) throw std::invalid_argument("quotient must have p components");
  if (!is_p_core(core, p))
    throw std::invalid_argument(core.to_string() + " is not a " + std::to_string(p) + "-core");

  int count = padded_bead_count(core, p);
  std::vector<int> beads_on(p, 0);
  for (int b : beta_set(core, count)) ++beads_on[b % p];
  // Sliding p new beads in at the top adds one bead per runner.
  int extra = 0;
  for (int q = 0; q < p; ++q) extra = std::max(extra, quotient[q].length() - beads_on[q]);
  count += extra * p;

  std::vector<int> beta;
  for (int q = 0; q < p; ++q) {
    const int n = beads_on[q] + extra;
    for (int level : beta_set(quotient[q], n)) beta.push_back(level * p + q);
  }
  return from_beta_set(std::move(beta));
}

MultiPartition hat(const MultiPartition& alpha, int p) {
  require_odd_prime(p);
  if (alpha.length() != p - 1) throw std::invalid_argument("hat: expected p-1 components");
  std::vector<Partition> comps(alpha.components().begin(), alpha.components().end());
  comps.insert(comps.begin() + (middle_index(p) - 1), Partition{});
  return MultiPartition(std::move(comps), Indexing::FullP, p);
}

MultiPartition unhat(const MultiPartition& gamma, int p) {
  require_odd_prime(p);
  if (gamma.length() != p) throw std::invalid_argument("unhat: expected p components");
  const int r = middle_index(p);
  if (!gamma[r - 1].empty()) throw std::invalid_argument("unhat: component r is not empty");
  std::vector<Partition> comps(gamma.components().begin(), gamma.components().end());
  comps.erase(comps.begin() + (r - 1));
  return MultiPartition(std::move(comps), Indexing::HIndexed, p);
}

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c)
      throw std::invalid_argument(std::string("parse error: expected '") + c + "' in \"" +
                                  std::string(text_) + "\"");
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  int integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_)
      throw std::invalid_argument("parse error: expected integer in \"" + std::string(text_) +
                                  "\"");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }
  void finish() {
    if (peek() != '\0')
      throw std::invalid_argument("parse error: trailing input in \"" + std::string(text_) + "\"");
  }

  Partition partition() {
    expect('[');
    std::vector<int> parts;
    if (!accept(']')) {
      do parts.push_back(integer());
      while (accept(','));
      expect(']');
    }
    if (!parts.empty() && parts.back() == 0)
      throw std::invalid_argument("parse error: zero part");
    return Partition(std::move(parts));
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Partition parse_partition(std::string_view text) {
  Lexer lex(text);
  Partition out = lex.partition();
  lex.finish();
  return out;
}

MultiPartition parse_multipartition(std::string_view text) {
  Lexer lex(text);
  lex.expect('[');
  std::vector<Partition> comps;
  if (!lex.accept(']')) {
    do comps.push_back(lex.partition());
    while (lex.accept(','));
    lex.expect(']');
  }
  lex.finish();
  return MultiPartition(std::move(comps));
}

}  // namespace wreath
