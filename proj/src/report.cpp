#include "pentatail/report.hpp"

#include <sstream>
#include <stdexcept>

namespace pentatail {

using nlohmann::json;

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw std::invalid_argument("unknown format '" + name + "' (expected json, csv or text)");
}

namespace {

json windows_json(const std::vector<ScanWindow>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back({w.k, w.lo, w.hi});
  return out;
}

json zeros_json(const std::vector<ZeroHit>& zs) {
  json out = json::array();
  for (const auto& z : zs) out.push_back({z.k, z.n});
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

void csv_row(std::ostream& os, std::initializer_list<std::string> fields) {
  bool first = true;
  for (const auto& f : fields) {
    if (!first) os << ',';
    os << csv_field(f);
    first = false;
  }
  os << '\n';
}

void verification_csv_rows(std::ostream& os, const VerificationReport& r) {
  for (const auto& z : r.zeros) csv_row(os, {r.subject, "zero", std::to_string(z.k), std::to_string(z.n), "0"});
  for (const auto& v : r.negatives) {
    csv_row(os, {r.subject, "negative", std::to_string(v.k), std::to_string(v.n), v.value.str()});
  }
  for (const auto& p : r.parametric_zeros) csv_row(os, {r.subject, "parametric_zero", "", "", p});
  for (const auto& z : r.extra_block_zeros) {
    csv_row(os, {r.subject, "extra_block_zero", std::to_string(z.k), std::to_string(z.n), "0"});
  }
  for (const auto& m : r.mismatches) csv_row(os, {r.subject, "mismatch", "", "", m});
}

void verification_text(std::ostream& os, const VerificationReport& r) {
  os << r.subject << ": " << to_string(r.status) << '\n';
  for (const auto& w : r.scanned) os << "  scanned k=" << w.k << " [" << w.lo << ", " << w.hi << ")\n";
  for (const auto& w : r.extra_blocks) {
    os << "  extra block k=" << w.k << " [" << w.lo << ", " << w.hi << ")\n";
  }
  for (const auto& z : r.zeros) os << "  zero k=" << z.k << " n=" << z.n << '\n';
  for (const auto& v : r.negatives) {
    os << "  negative k=" << v.k << " n=" << v.n << " value=" << v.value.str() << '\n';
  }
  for (const auto& p : r.parametric_zeros) os << "  family " << p << '\n';
  for (const auto& z : r.extra_block_zeros) {
    os << "  zero in extra block k=" << z.k << " n=" << z.n << '\n';
  }
  for (const auto& m : r.mismatches) os << "  mismatch: " << m << '\n';
}

json finding_json(const ConjectureFinding& f) {
  json j = {{"property", f.property}, {"k", f.k}, {"d", f.d}, {"n", f.n}, {"detail", f.detail}};
  j["m"] = f.m ? json(*f.m) : json(nullptr);
  return j;
}

void finding_csv(std::ostream& os, const std::string& subject, const std::string& kind,
                 const ConjectureFinding& f) {
  csv_row(os, {subject, kind, f.property, std::to_string(f.k), std::to_string(f.d),
               std::to_string(f.n), f.m ? std::to_string(*f.m) : "", f.detail});
}

void finding_text(std::ostream& os, const char* label, const ConjectureFinding& f) {
  os << "  " << label << ' ' << f.property << " k=" << f.k << " d=" << f.d << " n=" << f.n;
  if (f.m) os << " m=" << *f.m;
  if (!f.detail.empty()) os << ' ' << f.detail;
  os << '\n';
}

}  // namespace

json to_json(const VerificationReport& r) {
  json negatives = json::array();
  for (const auto& v : r.negatives) negatives.push_back({v.k, v.n, v.value.str()});
  return {
      {"subject", r.subject},
      {"scanned", windows_json(r.scanned)},
      {"zeros", zeros_json(r.zeros)},
      {"negatives", negatives},
      {"parametric_zeros", r.parametric_zeros},
      {"status", to_string(r.status)},
      {"head_checked", r.head_checked},
      {"extra_block", windows_json(r.extra_blocks)},
      {"extra_block_zeros", zeros_json(r.extra_block_zeros)},
      {"mismatches", r.mismatches},
  };
}

json to_json(const TheoremReport& r) {
  json reports = json::array();
  for (const auto& v : r.reports) reports.push_back(to_json(v));
  return {{"theorem", r.theorem}, {"status", to_string(r.status)}, {"reports", reports}};
}

json to_json(const ConjectureReport& r) {
  json findings = json::array();
  for (const auto& f : r.findings) findings.push_back(finding_json(f));
  json hard = json::array();
  for (const auto& f : r.hard_failures) hard.push_back(finding_json(f));
  json outcomes = json::array();
  for (const auto& o : r.outcomes) {
    outcomes.push_back({{"property", o.property},
                        {"scope", o.scope},
                        {"claimed", o.claimed},
                        {"cells", o.cells},
                        {"failures", o.failures}});
  }
  return {{"subject", r.subject},       {"grid", r.grid},
          {"conjecture_findings", findings}, {"hard_failures", hard},
          {"outcomes", outcomes},       {"exit_code", r.exit_code()}};
}

std::string emit_report(const VerificationReport& r, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::json:
      os << to_json(r).dump(2) << '\n';
      break;
    case Format::csv:
      os << "subject,kind,k,n,value\n";
      verification_csv_rows(os, r);
      break;
    case Format::text:
      verification_text(os, r);
      break;
  }
  return os.str();
}

std::string emit_report(const TheoremReport& r, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::json:
      os << to_json(r).dump(2) << '\n';
      break;
    case Format::csv:
      os << "subject,kind,k,n,value\n";
      for (const auto& v : r.reports) verification_csv_rows(os, v);
      break;
    case Format::text:
      os << r.theorem << ": " << to_string(r.status) << '\n';
      for (const auto& v : r.reports) verification_text(os, v);
      break;
  }
  return os.str();
}

std::string emit_report(const ConjectureReport& r, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::json:
      os << to_json(r).dump(2) << '\n';
      break;
    case Format::csv:
      os << "subject,kind,property,k,d,n,m,detail\n";
      for (const auto& x : r.findings) finding_csv(os, r.subject, "finding", x);
      for (const auto& x : r.hard_failures) finding_csv(os, r.subject, "hard_failure", x);
      break;
    case Format::text:
      os << r.subject << " (" << r.grid << "): exit " << r.exit_code() << '\n';
      for (const auto& o : r.outcomes) {
        os << "  " << o.property << ' ' << o.scope << (o.claimed ? " claimed" : " unclaimed") << ": "
           << o.failures << '/' << o.cells << " cells fail\n";
      }
      for (const auto& x : r.findings) finding_text(os, "finding", x);
      for (const auto& x : r.hard_failures) finding_text(os, "HARD", x);
      break;
  }
  return os.str();
}

}  // namespace pentatail
