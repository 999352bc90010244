#include "flopalg/ncgb/groebner.hpp"

#include "flopalg/error.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace flopalg::ncgb {

namespace {

constexpr std::size_t kNormalWordLimit = 200000;

/// Leftmost occurrence of the first (in basis order) leading word inside `word`.
std::optional<std::pair<std::size_t, std::size_t>> find_reducer(const Word& word,
                                                                const std::vector<NCPoly>& elements,
                                                                std::size_t skip) {
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (k == skip) continue;
    if (auto pos = word.find(elements[k].leading_word())) return std::pair{k, *pos};
  }
  return std::nullopt;
}

NCPoly reduce(const NCPoly& p, const std::vector<NCPoly>& elements, std::size_t skip = SIZE_MAX) {
  std::vector<freealg::NCTerm> done;
  NCPoly work = p;
  while (!work.is_zero()) {
    const auto& lead = work.leading();
    if (auto hit = find_reducer(lead.word, elements, skip)) {
      const auto& g = elements[hit->first];
      const std::size_t pos = hit->second;
      const std::size_t len = g.leading_word().degree();
      Word left = lead.word.subword(0, pos);
      Word right = lead.word.subword(pos + len, lead.word.degree() - pos - len);
      Rational c = lead.coeff;  // elements are monic
      work -= g.sandwich(left, right) * c;
    } else {
      done.push_back(lead);
      work = work.tail();
    }
  }
  return NCPoly(p.alphabet(), std::move(done));
}

void sort_by_leading_word(std::vector<NCPoly>& polys) {
  if (polys.empty()) return;
  freealg::MonomialOrder ord(polys.front().alphabet());
  std::sort(polys.begin(), polys.end(), [&](const NCPoly& a, const NCPoly& b) {
    return ord.less(a.leading_word(), b.leading_word());
  });
}

std::vector<NCPoly> interreduce(std::vector<NCPoly> polys) {
  std::erase_if(polys, [](const NCPoly& p) { return p.is_zero(); });
  for (auto& p : polys) p = p.monic();
  bool changed = true;
  while (changed) {
    changed = false;
    sort_by_leading_word(polys);
    for (std::size_t i = 0; i < polys.size();) {
      NCPoly r = reduce(polys[i], polys, i).monic();
      if (r.is_zero()) {
        polys.erase(polys.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        continue;
      }
      if (!(r == polys[i])) {
        polys[i] = std::move(r);
        changed = true;
      }
      ++i;
    }
  }
  sort_by_leading_word(polys);
  return polys;
}

struct Candidate {
  std::size_t i;
  std::size_t j;
  freealg::Ambiguity amb;
};

std::vector<Candidate> all_ambiguities(const std::vector<NCPoly>& elements) {
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j)
      for (auto& amb : freealg::overlaps(elements[i].leading_word(), elements[j].leading_word()))
        out.push_back({i, j, std::move(amb)});
  if (out.empty()) return out;
  freealg::MonomialOrder ord(elements.front().alphabet());
  std::stable_sort(out.begin(), out.end(), [&](const Candidate& a, const Candidate& b) {
    if (auto c = ord.compare(a.amb.word, b.amb.word); c != 0) return c < 0;
    return std::tie(a.i, a.j, a.amb.offset) < std::tie(b.i, b.j, b.amb.offset);
  });
  return out;
}

}  // namespace

std::vector<Word> GroebnerBasis::leading_words() const {
  std::vector<Word> out;
  out.reserve(elements.size());
  for (const auto& g : elements) out.push_back(g.leading_word());
  return out;
}

NCPoly s_polynomial(const GroebnerBasis& gb, std::size_t i, std::size_t j, const freealg::Ambiguity& amb) {
  const NCPoly& gi = gb.elements.at(i);
  const NCPoly& gj = gb.elements.at(j);
  const Word& wi = gi.leading_word();
  const Word& wj = gj.leading_word();
  const Word& w = amb.word;
  if (amb.kind == freealg::Ambiguity::Kind::Overlap) {
    // w = wi * right = left * wj
    Word right = w.subword(wi.degree(), w.degree() - wi.degree());
    Word left = w.subword(0, amb.offset);
    return gi.sandwich(Word{}, right) - gj.sandwich(left, Word{});
  }
  Word left = w.subword(0, amb.offset);
  Word right = w.subword(amb.offset + wj.degree(), w.degree() - amb.offset - wj.degree());
  return gi - gj.sandwich(left, right);
}

GroebnerBasis complete(const Presentation& pres, std::size_t degree_cap) {
  GroebnerBasis gb;
  gb.alphabet = pres.alphabet;
  gb.elements = interreduce(pres.relations);

  std::set<std::string> resolved;
  auto key_of = [&](const Candidate& c) {
    return gb.elements[c.i].to_string() + "|" + gb.elements[c.j].to_string() + "|" +
           std::to_string(c.amb.offset) + (c.amb.kind == freealg::Ambiguity::Kind::Overlap ? "o" : "i");
  };

  for (;;) {
    bool pending = false;
    bool added = false;
    for (const auto& c : all_ambiguities(gb.elements)) {
      if (c.amb.word.degree() > degree_cap) {
        pending = true;
        continue;
      }
      std::string key = key_of(c);
      if (resolved.contains(key)) continue;
      NCPoly r = reduce(s_polynomial(gb, c.i, c.j, c.amb), gb.elements);
      if (r.is_zero()) {
        resolved.insert(std::move(key));
        continue;
      }
      gb.elements.push_back(r.monic());
      gb.elements = interreduce(std::move(gb.elements));
      added = true;
      break;
    }
    if (!added) {
      gb.status = pending ? Status::Truncated : Status::Complete;
      gb.truncated_at = pending ? degree_cap : 0;
      return gb;
    }
  }
}

NCPoly normal_form(const NCPoly& p, const GroebnerBasis& gb) {
  if (!freealg::same_alphabet(p.alphabet(), gb.alphabet)) throw Error("mismatched alphabets");
  return reduce(p, gb.elements);
}

bool is_normal(const Word& word, const GroebnerBasis& gb) {
  return !find_reducer(word, gb.elements, SIZE_MAX).has_value();
}

std::vector<AmbiguityCheck> unresolved_ambiguities(const GroebnerBasis& gb) {
  std::vector<AmbiguityCheck> out;
  for (auto& c : all_ambiguities(gb.elements)) {
    NCPoly r = normal_form(s_polynomial(gb, c.i, c.j, c.amb), gb);
    if (!r.is_zero()) out.push_back({c.i, c.j, std::move(c.amb), std::move(r)});
  }
  return out;
}

DimensionCertificate normal_words(const GroebnerBasis& gb, std::size_t cap) {
  DimensionCertificate cert;
  cert.degree_cap = cap;
  if (!gb.complete()) {
    cert.diagnostics.push_back("basis truncated at degree " + std::to_string(gb.truncated_at) +
                               "; normal words do not certify a dimension");
    return cert;
  }
  const auto leads = gb.leading_words();
  auto normal_extension = [&](const Word& w) {
    return std::none_of(leads.begin(), leads.end(), [&](const Word& l) { return w.ends_with(l); });
  };

  std::vector<Word> level;
  if (normal_extension(Word{})) level.push_back(Word{});
  freealg::MonomialOrder ord(gb.alphabet);
  for (std::size_t d = 0;; ++d) {
    if (level.empty()) {
      cert.status = DimensionStatus::Finite;
      cert.dimension = cert.normal_words.size();
      cert.witness_degree = d;
      return cert;
    }
    cert.normal_words.insert(cert.normal_words.end(), level.begin(), level.end());
    if (d >= cap || cert.normal_words.size() > kNormalWordLimit) {
      cert.diagnostics.push_back("normal words persist at degree " + std::to_string(d) + " (" +
                                 std::to_string(cert.normal_words.size()) + " words enumerated)");
      cert.normal_words.clear();
      return cert;
    }
    std::vector<Word> next;
    for (const auto& w : level)
      for (std::size_t l = 0; l < gb.alphabet->size(); ++l) {
        Word e = w * Word{static_cast<freealg::Letter>(l)};
        if (normal_extension(e)) next.push_back(std::move(e));
      }
    std::sort(next.begin(), next.end(), [&](const Word& a, const Word& b) { return ord.less(a, b); });
    level = std::move(next);
  }
}

std::size_t default_degree_cap(const Presentation& pres) {
  std::size_t maxdeg = 0;
  for (const auto& r : pres.relations) maxdeg = std::max(maxdeg, r.degree());
  return 2 * maxdeg + 4;
}

DimensionResult dimension(const Presentation& pres, std::optional<std::size_t> initial_cap) {
  std::size_t cap = initial_cap.value_or(default_degree_cap(pres));
  std::size_t maxdeg = 0;
  for (const auto& r : pres.relations) maxdeg = std::max(maxdeg, r.degree());
  cap = std::max(cap, maxdeg);
  DimensionResult result;
  std::vector<std::string> history;
  for (int attempt = 0; attempt < 4; ++attempt, cap *= 2) {
    result.basis = complete(pres, cap);
    result.certificate = normal_words(result.basis, cap);
    if (result.certificate.finite()) break;
    for (const auto& d : result.certificate.diagnostics) history.push_back("cap " + std::to_string(cap) + ": " + d);
  }
  if (!result.certificate.finite()) result.certificate.diagnostics = std::move(history);
  return result;
}

}  // namespace flopalg::ncgb
