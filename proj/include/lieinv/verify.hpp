#pragma once

#include <string>
#include <vector>

#include "lieinv/tables.hpp"

namespace lieinv {

// Outcome of checking one tabulated row (or coverage claim) against the
// engine's own computation.
enum class VerifyStatus {
  MATCH,                 // the tabulated data is reproduced exactly
  PAPER_TYPO_SUSPECTED,  // tabulated data fails, the recorded correction passes
  MISMATCH,              // tabulated data fails with no passing correction
  SKIPPED,               // not decided (documented omission, e.g. the abelian case)
};

std::string to_string(VerifyStatus s);

struct VerificationRecord {
  std::string table;      // table_name() of the source table
  std::string label;      // row label as tabulated
  std::string case_name;  // catalog case
  std::string params;     // parameter instance, "" for parameter-free cases
  VerifyStatus status = VerifyStatus::MATCH;
  std::string detail;
};

struct VerifyOptions {
  bool strict = false;        // count PAPER_TYPO_SUSPECTED as a failure
  long long grid_cap = 1'000'000;  // cap for coverage grid searches
};

std::vector<VerificationRecord> verify_table(TableId id, const std::vector<TableRow>& rows,
                                             const VerifyOptions& opt = {});

std::vector<VerificationRecord> verify_all(const std::vector<TableRow>& rows,
                                           const VerifyOptions& opt = {});

// 0 when every record is MATCH/SKIPPED (typo-suspected rows tolerated unless
// strict), 1 otherwise.
int exit_code_for(const std::vector<VerificationRecord>& records, bool strict);

}  // namespace lieinv
