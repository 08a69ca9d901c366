//! \file check_report.hpp
//! \brief named residuals with tolerances and verdicts.

#ifndef EPSVERIFY_CHECK_REPORT_HPP_
#define EPSVERIFY_CHECK_REPORT_HPP_

#include <map>
#include <string>
#include <vector>

namespace epsverify {

enum class Verdict { pass, fail, not_applicable };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "na";
  }
  return "?";
}

struct CheckItem {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  Verdict verdict = Verdict::not_applicable;
};

inline CheckItem make_check(std::string name, double residual, double tol,
                            bool applicable = true) {
  CheckItem item;
  item.name = std::move(name);
  item.residual = residual;
  item.tolerance = tol;
  item.verdict = !applicable ? Verdict::not_applicable
               : residual < tol ? Verdict::pass
                                : Verdict::fail;
  return item;
}

// Residuals of one named group of checks, at one point or aggregated.
struct CheckReport {
  std::string group;
  std::vector<CheckItem> items;

  // na if every item is na; fail if any applicable item fails; else pass.
  Verdict overall() const {
    bool any_applicable = false;
    for (const auto& it : items) {
      if (it.verdict == Verdict::not_applicable) continue;
      any_applicable = true;
      if (it.verdict == Verdict::fail) return Verdict::fail;
    }
    return any_applicable ? Verdict::pass : Verdict::not_applicable;
  }

  double max_residual() const {
    double m = 0.0;
    for (const auto& it : items)
      if (it.verdict != Verdict::not_applicable && it.residual > m) m = it.residual;
    return m;
  }
};

// Verdict of one condition predicate, with auxiliary scalars such as a
// fitted pseudosymmetry function and its fit residual.
struct ConditionVerdict {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  Verdict verdict = Verdict::not_applicable;
  std::map<std::string, double> aux;
};

}  // namespace epsverify

#endif  // EPSVERIFY_CHECK_REPORT_HPP_
