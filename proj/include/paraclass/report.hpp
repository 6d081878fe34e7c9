#ifndef PARACLASS_REPORT_HPP
#define PARACLASS_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "paraclass/cyclotomic.hpp"
#include "paraclass/para_class.hpp"

namespace paraclass {

/* Reference values for the scan diff: the published list of squarefree
 * d < 100 with Laurent ring of integers, and the published principal
 * ideal domain sublist. */
const std::vector<long>& published_laurent_list();
const std::vector<long>& published_pid_list();

std::string structure_json(const AbelianGroupStructure& s);
std::string report_to_json(const ClassificationReport& rep);

struct ScanRow {
    Int d;
    bool ok = true;
    std::string error;
    RingElement eps;
    bool laurent = false;
    Int index;  // [O_d : Z[eps]]
    std::optional<FlagWithCert> residually_nilpotent;
    std::optional<AbelianGroupStructure> class_group;
    std::optional<AbelianGroupStructure> s_class_group;
    std::optional<SComparison> comparison;
    std::string s_scope_note;
    long para_class_count = -1;
    std::string to_json() const;
};

struct ScanReport {
    long max_d = 0;
    std::vector<ScanRow> rows;
    std::vector<long> computed_laurent;
    std::vector<long> computed_pid;
    long laurent_agreement = 0;  // overlap with the published list
    std::string to_json() const;
};

ScanRow scan_one(const Int& d);
ScanReport run_scan(long max_d, long jobs);

struct VerifyResult {
    std::string name;
    bool pass = false;
    std::vector<std::string> transcript;
};

/* Named end-to-end scenarios: d10, wreath_ideal, zc2, cyclo23,
 * telescope, embedding. */
VerifyResult verify_example(const std::string& name);
std::vector<std::string> verify_example_names();

/* Append-only JSON-lines cache keyed by (kind, parameter); the path
 * comes from PARACLASS_CACHE when set. */
class ResultCache {
  public:
    explicit ResultCache(std::string path);
    static std::string default_path();
    std::optional<std::string> lookup(const std::string& kind, const std::string& parameter) const;
    void store(const std::string& kind, const std::string& parameter, const std::string& payload);

  private:
    std::string path_;
    std::vector<std::string> lines_;
};

}  // namespace paraclass

#endif
