#include "algknot/numbers.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "algknot/errors.hpp"

namespace algknot {

namespace mp = boost::multiprecision;

std::string to_fraction_string(const Rat& r) {
  const Int num = mp::numerator(r);
  const Int den = mp::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

Int parse_int(const std::string& text) {
  if (text.empty()) throw InvalidInput(Errc::MalformedText, "empty integer");
  std::size_t start = text[0] == '-' ? 1 : 0;
  if (start == text.size())
    throw InvalidInput(Errc::MalformedText, "bare sign in '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw InvalidInput(Errc::MalformedText, "not an integer: '" + text + "'");
  return Int(text);
}

}  // namespace

Rat parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  const Int num = parse_int(text.substr(0, slash));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InvalidInput(Errc::MalformedText, "zero denominator in '" + text + "'");
  return Rat(num, den);
}

double approx(const Rat& r) { return r.convert_to<double>(); }

Int ceil_rat(const Rat& r) {
  const Int num = mp::numerator(r);
  const Int den = mp::denominator(r);  // > 0 in canonical form
  Int q = num / den;
  if (q * den < num) ++q;
  return q;
}

std::string errc_name(Errc code) {
  switch (code) {
    case Errc::MalformedText: return "MalformedText";
    case Errc::NotIncreasing: return "NotIncreasing";
    case Errc::CharacteristicConditionViolated: return "CharacteristicConditionViolated";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::MultiplicityTooSmall: return "MultiplicityTooSmall";
    case Errc::NotCoprimeGenerators: return "NotCoprimeGenerators";
    case Errc::QueryBeyondTable: return "QueryBeyondTable";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::GenusOrderViolated: return "GenusOrderViolated";
    case Errc::EigenvalueTooCloseToZero: return "EigenvalueTooCloseToZero";
  }
  return "UnknownError";
}

}  // namespace algknot
