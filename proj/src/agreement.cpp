#include "sp/agreement.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sp {

Mark StudyMarks::mark(const std::string& claim, const std::string& cand,
                      const std::string& part) const {
  auto it = marks.find({claim, cand, part});
  return it == marks.end() ? Mark::None : it->second;
}

StudyMarks parse_marks(const std::string& text, const std::string& stage) {
  StudyMarks m;
  m.stage = stage;
  std::set<std::string> claim_seen, part_seen;
  std::map<std::string, std::set<std::string>> cand_seen;

  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    for (char& c : line)
      if (c == ',' || c == '\t') c = ' ';
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks.size() < 4 || toks.size() > 5)
      throw VocabularyError("marks line " + std::to_string(lineno) +
                            ": expected claim candidate participant mark [confidence]");
    const std::string &claim = toks[0], &cand = toks[1], &part = toks[2];
    std::string mark_word = toks[3];
    std::transform(mark_word.begin(), mark_word.end(), mark_word.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    Mark mk;
    if (mark_word == "best") mk = Mark::Best;
    else if (mark_word == "mistake") mk = Mark::Mistake;
    else if (mark_word == "none") mk = Mark::None;
    else
      throw VocabularyError("marks line " + std::to_string(lineno) + ": unknown mark \"" +
                            toks[3] + "\"");

    if (claim_seen.insert(claim).second) m.claims.push_back(claim);
    if (cand_seen[claim].insert(cand).second) m.candidates[claim].push_back(cand);
    if (part_seen.insert(part).second) m.participants.push_back(part);

    auto key = std::make_tuple(claim, cand, part);
    auto it = m.marks.find(key);
    if (it != m.marks.end() && it->second != mk)
      throw VocabularyError("marks line " + std::to_string(lineno) + ": conflicting marks for (" +
                            claim + ", " + cand + ", " + part + ")");
    m.marks[key] = mk;
    if (toks.size() == 5) m.confidence[{claim, part}] = std::stoi(toks[4]);
  }
  return m;
}

AgreementLevel claim_level(const StudyMarks& m, const std::string& claim) {
  auto cands_it = m.candidates.find(claim);
  if (cands_it == m.candidates.end()) throw VocabularyError("unknown claim id \"" + claim + "\"");
  const std::vector<std::string>& cands = cands_it->second;
  const size_t n = m.participants.size();

  for (const std::string& cand : cands) {
    size_t best = 0;
    for (const std::string& p : m.participants)
      if (m.mark(claim, cand, p) == Mark::Best) ++best;
    if (best == n && n > 0) return AgreementLevel::A;
  }
  for (const std::string& cand : cands) {
    size_t best = 0;
    bool mistake_from_rest = false;
    for (const std::string& p : m.participants) {
      Mark mk = m.mark(claim, cand, p);
      if (mk == Mark::Best) ++best;
      else if (mk == Mark::Mistake) mistake_from_rest = true;
    }
    if (best * 2 > n && !mistake_from_rest) return AgreementLevel::B;
  }
  for (const std::string& cand : cands) {
    bool any_mistake = false;
    for (const std::string& p : m.participants)
      if (m.mark(claim, cand, p) == Mark::Mistake) any_mistake = true;
    if (!any_mistake) return AgreementLevel::C;
  }
  return AgreementLevel::D;
}

std::map<AgreementLevel, LevelEntry> level_distribution(const StudyMarks& m) {
  std::map<AgreementLevel, LevelEntry> out;
  for (AgreementLevel l : {AgreementLevel::A, AgreementLevel::B, AgreementLevel::C,
                           AgreementLevel::D})
    out[l] = {};
  for (const std::string& claim : m.claims) ++out[claim_level(m, claim)].count;
  std::int64_t total = static_cast<std::int64_t>(m.claims.size());
  for (auto& [l, e] : out) e.fraction = total == 0 ? Rational(0) : Rational(e.count, total);
  return out;
}

std::map<std::pair<std::string, std::string>, Rational> pairwise_agreement(
    const StudyMarks& m) {
  std::map<std::pair<std::string, std::string>, Rational> out;
  for (size_t i = 0; i < m.participants.size(); ++i) {
    for (size_t j = i + 1; j < m.participants.size(); ++j) {
      const std::string& pa = m.participants[i];
      const std::string& pb = m.participants[j];
      std::int64_t points = 0;
      Rational sum(0);
      for (const std::string& claim : m.claims) {
        for (const std::string& cand : m.candidates.at(claim)) {
          Mark a = m.mark(claim, cand, pa);
          Mark b = m.mark(claim, cand, pb);
          ++points;
          if (a == b) sum = sum + Rational(1);
          else if ((a == Mark::Best && b == Mark::Mistake) ||
                   (a == Mark::Mistake && b == Mark::Best))
            ;  // conflict: 0
          else
            sum = sum + Rational(1, 2);
        }
      }
      auto key = pa < pb ? std::make_pair(pa, pb) : std::make_pair(pb, pa);
      out[key] = points == 0 ? Rational(0) : sum / Rational(points);
    }
  }
  return out;
}

MistakeStatistics mistake_statistics(const StudyMarks& m) {
  std::int64_t total = 0, with_mistake = 0, with_both = 0;
  for (const std::string& claim : m.claims) {
    for (const std::string& cand : m.candidates.at(claim)) {
      ++total;
      bool any_mistake = false, any_best = false;
      for (const std::string& p : m.participants) {
        Mark mk = m.mark(claim, cand, p);
        if (mk == Mark::Mistake) any_mistake = true;
        if (mk == Mark::Best) any_best = true;
      }
      if (any_mistake) ++with_mistake;
      if (any_mistake && any_best) ++with_both;
    }
  }
  MistakeStatistics s;
  s.with_mistake = total == 0 ? Rational(0) : Rational(with_mistake, total);
  s.with_best_and_mistake = total == 0 ? Rational(0) : Rational(with_both, total);
  return s;
}

std::string level_name(AgreementLevel l) {
  switch (l) {
    case AgreementLevel::A: return "A";
    case AgreementLevel::B: return "B";
    case AgreementLevel::C: return "C";
    case AgreementLevel::D: return "D";
  }
  return "";
}

std::string render_agreement_report(const StudyMarks& m) {
  std::ostringstream out;
  if (!m.stage.empty()) out << "Stage: " << m.stage << "\n";
  out << "Claims: " << m.claims.size() << ", participants: " << m.participants.size() << "\n\n";
  out << "Agreement levels\n";
  const char* descriptions[] = {"full agreement on best formalization",
                                "majority agreement on best formalization",
                                "full agreement on absence of mistakes", "no agreement"};
  auto dist = level_distribution(m);
  int i = 0;
  for (const auto& [l, e] : dist) {
    out << "  Level " << level_name(l) << ": " << e.count << " (" << e.fraction.to_fixed_string(2)
        << ")  " << descriptions[i++] << "\n";
  }
  MistakeStatistics ms = mistake_statistics(m);
  out << "\nMistake marks: " << (ms.with_mistake * Rational(100)).to_fixed_string(0)
      << "% of formalizations with >= 1 mistake mark, "
      << (ms.with_best_and_mistake * Rational(100)).to_fixed_string(0)
      << "% with both best and mistake marks\n";
  out << "\nPairwise agreement\n";
  for (const auto& [pair, value] : pairwise_agreement(m))
    out << "  " << pair.first << " / " << pair.second << ": " << value.to_fixed_string(2) << "\n";
  return out.str();
}

}  // namespace sp
