#include "algknot/puiseux.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>

#include "algknot/errors.hpp"

namespace algknot {

namespace mp = boost::multiprecision;

PuiseuxSequence PuiseuxSequence::from_terms(std::vector<Int> terms) {
  if (terms.size() < 2)
    throw InvalidInput(Errc::MalformedText,
                       "need a multiplicity and at least one essential term");
  if (terms.front() < 2)
    throw InvalidInput(Errc::MultiplicityTooSmall,
                       "multiplicity q0 must be at least 2, got " + terms.front().str());
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (terms[i] <= terms[i - 1])
      throw InvalidInput(Errc::NotIncreasing,
                         terms[i].str() + " does not exceed " + terms[i - 1].str());

  std::vector<Int> d;
  d.reserve(terms.size());
  d.push_back(terms.front());
  for (std::size_t i = 1; i < terms.size(); ++i)
    d.push_back(mp::gcd(d.back(), terms[i]));
  if (d.back() != 1)
    throw InvalidInput(Errc::NotCoprime,
                       "gcd chain ends at " + d.back().str() + ", not 1");
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (terms[i] % d[i - 1] == 0)
      throw InvalidInput(Errc::CharacteristicConditionViolated,
                         "D" + std::to_string(i - 1) + " = " + d[i - 1].str() +
                             " divides q" + std::to_string(i) + " = " + terms[i].str());
  return PuiseuxSequence(std::move(terms), std::move(d));
}

PuiseuxSequence PuiseuxSequence::parse(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos)
    throw InvalidInput(Errc::MalformedText, "expected 'q0;q1,...' in '" + text + "'");
  auto parse_term = [&](const std::string& piece) -> Int {
    if (piece.empty())
      throw InvalidInput(Errc::MalformedText, "empty term in '" + text + "'");
    for (char ch : piece)
      if (ch < '0' || ch > '9')
        throw InvalidInput(Errc::MalformedText, "not a positive integer: '" + piece + "'");
    return Int(piece);
  };
  std::vector<Int> terms;
  terms.push_back(parse_term(text.substr(0, semi)));
  std::string rest = text.substr(semi + 1);
  std::size_t pos = 0;
  while (true) {
    const auto comma = rest.find(',', pos);
    terms.push_back(parse_term(rest.substr(pos, comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return from_terms(std::move(terms));
}

std::vector<Int> PuiseuxSequence::semigroup_generators() const {
  std::vector<Int> s;
  s.reserve(q_.size());
  s.push_back(q_.front());
  // numerator of s_i: D0*q1 + D1*(q2-q1) + ... + D_{i-1}*(q_i - q_{i-1})
  Int numerator = 0;
  for (std::size_t i = 1; i < q_.size(); ++i) {
    numerator += d_[i - 1] * (q_[i] - (i == 1 ? Int(0) : q_[i - 1]));
    internal_check(numerator % d_[i - 1] == 0, "semigroup generator not integral");
    s.push_back(numerator / d_[i - 1]);
    internal_check(s[i] > s[i - 1], "semigroup generators not increasing");
  }
  return s;
}

Int PuiseuxSequence::milnor_number() const {
  Int mu = 0;
  for (std::size_t i = 1; i < q_.size(); ++i)
    mu += (q_[i] - 1) * (d_[i - 1] - d_[i]);
  internal_check(mu % 2 == 0 && mu >= 2, "Milnor number must be even and >= 2");
  return mu;
}

Int PuiseuxSequence::genus() const { return milnor_number() / 2; }

IteratedTorusDescription PuiseuxSequence::cable_stages() const {
  const auto s = semigroup_generators();
  IteratedTorusDescription it;
  it.stages.reserve(stage_count());
  for (std::size_t i = 1; i < q_.size(); ++i) {
    internal_check(d_[i - 1] % d_[i] == 0 && s[i] % d_[i] == 0,
                   "cable stage parameters not integral");
    Int p = d_[i - 1] / d_[i];
    Int r = s[i] / d_[i];
    internal_check(mp::gcd(p, r) == 1, "cable stage parameters not coprime");
    it.stages.emplace_back(std::move(p), std::move(r));
  }
  return it;
}

std::string PuiseuxSequence::to_text() const {
  std::ostringstream os;
  os << q_[0] << ';';
  for (std::size_t i = 1; i < q_.size(); ++i) {
    if (i > 1) os << ',';
    os << q_[i];
  }
  return os.str();
}

KnotSpec KnotSpec::torus(Int a, Int b) {
  if (a > b) std::swap(a, b);
  if (a < 2)
    throw InvalidInput(Errc::MultiplicityTooSmall,
                       "torus parameter " + a.str() + " is below 2");
  if (a == b || mp::gcd(a, b) != 1)
    throw InvalidInput(Errc::NotCoprime,
                       "T(" + a.str() + "," + b.str() + ") is a link, not a knot");
  std::vector<Int> terms;
  terms.push_back(std::move(a));
  terms.push_back(std::move(b));
  return KnotSpec(PuiseuxSequence::from_terms(std::move(terms)));
}

KnotSpec KnotSpec::algebraic(PuiseuxSequence seq) { return KnotSpec(std::move(seq)); }

std::string KnotSpec::display() const {
  if (is_torus())
    return "T(" + seq_.terms()[0].str() + "," + seq_.terms()[1].str() + ")";
  return "(" + seq_.to_text() + ")";
}

}  // namespace algknot
