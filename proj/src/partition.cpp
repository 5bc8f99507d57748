#include "corekit/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "corekit/errors.hpp"

namespace corekit {

Partition Partition::from_parts(std::vector<int> parts) {
  for (int v : parts) {
    if (v <= 0) throw Error(Errc::NonPositivePart, "partition parts must be positive, got " + std::to_string(v));
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  Partition p;
  p.size_ = std::accumulate(parts.begin(), parts.end(), 0L);
  p.parts_ = std::move(parts);
  return p;
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(p.part(1)), 0);
  for (int v : p.parts()) {
    for (int j = 0; j < v; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return Partition::from_parts(std::move(out));
}

bool is_self_conjugate(const Partition& p) {
  return conjugate(p) == p;
}

int durfee_side(const Partition& p) {
  int d = 0;
  while (p.part(static_cast<std::size_t>(d + 1)) >= d + 1) ++d;
  return d;
}

FrequencyForm::FrequencyForm(std::map<int, int> multiplicities) : mult_(std::move(multiplicities)) {
  for (auto [part, m] : mult_) {
    if (part <= 0 || m <= 0) {
      throw Error(Errc::InvalidArgument, "frequency form needs positive parts and multiplicities");
    }
  }
}

int FrequencyForm::multiplicity(int part) const {
  auto it = mult_.find(part);
  return it == mult_.end() ? 0 : it->second;
}

FrequencyForm to_frequency(const Partition& p) {
  std::map<int, int> m;
  for (int v : p.parts()) ++m[v];
  return FrequencyForm(std::move(m));
}

Partition from_frequency(const FrequencyForm& f) {
  std::vector<int> parts;
  for (auto [part, m] : f.multiplicities()) parts.insert(parts.end(), static_cast<std::size_t>(m), part);
  return Partition::from_parts(std::move(parts));
}

bool is_distinct_odd(const Partition& p) noexcept {
  auto parts = p.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] % 2 == 0) return false;
    if (i + 1 < parts.size() && parts[i] == parts[i + 1]) return false;
  }
  return true;
}

DistinctOddPartition::DistinctOddPartition(Partition p) : inner_(std::move(p)) {
  if (!is_distinct_odd(inner_)) {
    throw Error(Errc::NotDistinctOdd, "not a partition into distinct odd parts: " + format_partition(inner_));
  }
}

std::string format_partition(const Partition& p) {
  if (p.empty()) return "()";
  std::string out;
  for (int v : p.parts()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

namespace {

long parse_int(std::string_view tok, std::string_view whole) {
  while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
  while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
  long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw Error(Errc::Parse, "malformed partition text '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  if (text.empty() || text == "()") return {};
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(start, comma - start);
    std::size_t caret = tok.find('^');
    long part = parse_int(tok.substr(0, caret), text);
    long mult = 1;
    if (caret != std::string_view::npos) {
      mult = parse_int(tok.substr(caret + 1), text);
      if (mult <= 0) throw Error(Errc::Parse, "multiplicity must be positive in '" + std::string(text) + "'");
    }
    if (part <= 0) throw Error(Errc::NonPositivePart, "partition parts must be positive, got " + std::to_string(part));
    if (part > 1'000'000 || mult > 1'000'000) throw Error(Errc::Parse, "part or multiplicity too large");
    parts.insert(parts.end(), static_cast<std::size_t>(mult), static_cast<int>(part));
    start = comma + 1;
  }
  return Partition::from_parts(std::move(parts));
}

}  // namespace corekit
