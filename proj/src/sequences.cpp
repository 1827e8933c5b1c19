#include "eseq/sequences.hpp"

#include <cstdlib>
#include <stdexcept>

namespace eseq {

ESequencePrefix::ESequencePrefix(Terms terms) : terms_(std::move(terms)) {
  for (std::uint64_t t : terms_) {
    if (t == 0) throw std::invalid_argument("E-sequence terms must be >= 1");
  }
}

ESequencePrefix ESequencePrefix::parse(const std::string& text) {
  Terms out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ',' && text[end] != ' ') ++end;
    const std::string tok = text.substr(pos, end - pos);
    char* rest = nullptr;
    unsigned long long v = std::strtoull(tok.c_str(), &rest, 10);
    if (rest == nullptr || *rest != '\0' || v == 0) {
      throw std::invalid_argument("bad E-sequence term: '" + tok + "'");
    }
    out.push_back(v);
    pos = end;
  }
  return ESequencePrefix(std::move(out));
}

std::uint64_t ESequencePrefix::term(std::size_t i) const {
  if (i < 1 || i > terms_.size()) {
    throw std::out_of_range("E-sequence index out of range");
  }
  return terms_[i - 1];
}

void ESequencePrefix::push_back(std::uint64_t term) {
  if (term == 0) throw std::invalid_argument("E-sequence terms must be >= 1");
  terms_.push_back(term);
}

void Accumulators::extend(std::uint64_t term, std::uint64_t bit_cap) {
  std::uint64_t nb = checked_bits_add(b, term, bit_cap);
  B *= 3;
  Int p = pow2(b);
  B += p;  // B_n = 3 B_{n-1} + 2^{b_{n-1}}
  b = nb;
  n += 1;
}

Accumulators accumulate(const ESequencePrefix& prefix, std::uint64_t bit_cap) {
  Accumulators acc;
  for (std::uint64_t t : prefix.terms()) acc.extend(t, bit_cap);
  return acc;
}

BlockAccumulators accumulate_block(const ESequencePrefix& prefix,
                                   std::size_t u, std::size_t v,
                                   std::uint64_t bit_cap) {
  if (u < 1 || v + 2 < u || v > prefix.size()) {
    throw std::out_of_range("block bounds out of range");
  }
  BlockAccumulators blk;
  blk.u = u;
  blk.v = v;
  if (v + 2 == u) {  // B_u^{u-2} = 0
    blk.B = 0;
    return blk;
  }
  blk.B = 1;  // B_u^{u-1}
  for (std::size_t i = u; i <= v; ++i) {
    // b_u^i = b_u^{i-1} + a_i, then B_u^i = 3 B_u^{i-1} + 2^{b_u^i}.
    blk.b = checked_bits_add(blk.b, prefix.term(i), bit_cap);
    blk.B *= 3;
    Int p = pow2(blk.b);
    blk.B += p;
  }
  return blk;
}

bool split_identity_holds(const ESequencePrefix& prefix, std::size_t u,
                          std::size_t v, std::uint64_t bit_cap) {
  const std::size_t n = prefix.size();
  if (n < 3 || u < 1 || u > v || v > n - 2) {
    throw std::out_of_range("split requires 1 <= u <= v <= n-2");
  }
  Accumulators full = accumulate(prefix, bit_cap);

  Int sum = 0;
  if (u >= 2) {
    // 3^{n-u+1} B_1^{u-2}; for u = 1 the sentinel B_1^{-1} = 0 drops the term.
    sum += pow3(n - u + 1) * accumulate_block(prefix, 1, u - 2, bit_cap).B;
  }
  Accumulators head;
  for (std::size_t i = 1; i < u; ++i) head.extend(prefix.term(i), bit_cap);
  sum += pow3(n - 1 - v) * pow2(head.b) *
         accumulate_block(prefix, u, v, bit_cap).B;

  Accumulators head2 = head;
  for (std::size_t i = u; i <= v + 1; ++i) head2.extend(prefix.term(i), bit_cap);
  sum += pow2(head2.b) * accumulate_block(prefix, v + 2, n - 1, bit_cap).B;

  return sum == full.B;
}

}  // namespace eseq
