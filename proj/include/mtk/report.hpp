#pragma once

#include <string>
#include <vector>

namespace mtk {

/// One verified statement. `anchor` is the stable name of the law being
/// checked (e.g. "measure.additivity"), `detail` carries the computed values
/// and witnesses as rational strings.
struct CheckRecord {
    std::string anchor;
    bool pass = true;
    bool flagged = false; // passed vacuously or with an attainment caveat
    std::string detail;
};

struct Report {
    std::string name;
    std::vector<CheckRecord> records;

    bool pass() const {
        for (const auto& r : records)
            if (!r.pass) return false;
        return true;
    }
    bool flagged() const {
        for (const auto& r : records)
            if (r.flagged) return true;
        return false;
    }
    void add(std::string anchor, bool ok, std::string detail = "", bool flag = false) {
        records.push_back({std::move(anchor), ok, flag, std::move(detail)});
    }
    void merge(const Report& other) {
        records.insert(records.end(), other.records.begin(), other.records.end());
    }
};

} // namespace mtk
