#include "khecke/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "khecke/errors.hpp"

namespace khecke {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  for (int p : parts_) {
    if (p <= 0) domain_fail("partition parts must be positive");
    size_ += p;
  }
}

Partition Partition::parse(std::string_view text) {
  if (text.empty() || text == "0" || text == "-" || text == "()") return {};
  std::vector<int> parts;
  if (text.find(',') == std::string_view::npos && text.size() > 1) {
    for (char c : text) {
      if (c < '1' || c > '9') domain_fail("malformed partition '" + std::string(text) + "'");
      parts.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view tok = text.substr(pos, end - pos);
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v <= 0)
        domain_fail("malformed partition '" + std::string(text) + "'");
      parts.push_back(v);
      pos = end + 1;
    }
  }
  auto sorted = parts;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (sorted != parts) domain_fail("partition parts must be weakly decreasing: '" + std::string(text) + "'");
  return Partition(std::move(parts));
}

Partition Partition::with_part(int p) const {
  auto v = parts_;
  v.push_back(p);
  return Partition(std::move(v));
}

std::string Partition::label() const {
  bool wide = std::any_of(parts_.begin(), parts_.end(), [](int p) { return p >= 10; });
  if (wide) return "(" + comma_label() + ")";
  std::string s;
  for (int p : parts_) s += static_cast<char>('0' + p);
  return s;
}

std::string Partition::comma_label() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return a.parts_ <=> b.parts_;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return false;
  int sa = 0, sb = 0;
  std::size_t len = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < len; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa < sb) return false;
  }
  return true;
}

static void fill_partitions(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = 1; p <= std::min(remaining, max_part); ++p) {
    cur.push_back(p);
    fill_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int d, int max_part) {
  std::vector<Partition> out;
  if (d < 0) return out;
  std::vector<int> cur;
  fill_partitions(d, max_part, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_up_to(int d, int max_part) {
  std::vector<Partition> out;
  for (int k = 0; k <= d; ++k) {
    auto p = partitions_of(k, max_part);
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

}  // namespace khecke
