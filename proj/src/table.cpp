#include "charpoly/table.hpp"

#include "charpoly/characters.hpp"
#include "charpoly/charpolys.hpp"
#include "charpoly/errors.hpp"
#include "charpoly/moments.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <sstream>
#include <stdexcept>

namespace charpoly {

namespace {

long long cell_value(const Polynomial& weyl, const Polynomial& specht) {
    BigInt v;
    {
        Rational m = stable_moment(weyl * specht);
        if (!m.is_integer() || m.is_negative())
            throw ConsistencyError("restriction table: non-integral entry " + m.str());
        v = m.numerator();
    }
    return v.convert_to<long long>();
}

}  // namespace

CoeffTable build_restriction_table_serial(int max) {
    if (max < 0) throw std::invalid_argument("restriction table: negative bound");
    CoeffTable t;
    t.rows = partitions_up_to(max);
    t.cols = t.rows;
    std::size_t n = t.rows.size();
    std::vector<Polynomial> weyls(n), spechts(n);
    for (std::size_t i = 0; i < n; ++i) {
        weyls[i] = weyl_poly(t.rows[i]);
        spechts[i] = specht_poly(t.cols[i]);
    }
    t.entries.assign(n, std::vector<long long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.entries[i][j] = cell_value(weyls[i], spechts[j]);
    return t;
}

CoeffTable build_restriction_table(int max, int jobs) {
    if (jobs <= 1) return build_restriction_table_serial(max);
    if (max < 0) throw std::invalid_argument("restriction table: negative bound");
    CoeffTable t;
    t.rows = partitions_up_to(max);
    t.cols = t.rows;
    int n = static_cast<int>(t.rows.size());
    // Warm the shared character tables before the parallel region.
    for (int d = 0; d <= max; ++d) CharacterTable::get(d);
    std::vector<Polynomial> weyls(n), spechts(n);
    for (int i = 0; i < n; ++i) {
        weyls[i] = weyl_poly(t.rows[i]);
        spechts[i] = specht_poly(t.cols[i]);
    }
    t.entries.assign(n, std::vector<long long>(n));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs) collapse(2)
#endif
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.entries[i][j] = cell_value(weyls[i], spechts[j]);
    return t;
}

std::string table_to_text(const CoeffTable& t) {
    // Column width per column for alignment; rows labeled by partition.
    std::size_t label_w = 0;
    for (const auto& p : t.rows) label_w = std::max(label_w, format_partition(p).size());
    std::vector<std::size_t> col_w(t.cols.size());
    for (std::size_t j = 0; j < t.cols.size(); ++j) {
        col_w[j] = format_partition(t.cols[j]).size();
        for (std::size_t i = 0; i < t.rows.size(); ++i)
            col_w[j] = std::max(col_w[j], std::to_string(t.entries[i][j]).size());
    }
    std::ostringstream os;
    os << std::string(label_w, ' ');
    for (std::size_t j = 0; j < t.cols.size(); ++j) {
        std::string h = format_partition(t.cols[j]);
        os << ' ' << std::string(col_w[j] - h.size(), ' ') << h;
    }
    os << '\n';
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        std::string label = format_partition(t.rows[i]);
        os << label << std::string(label_w - label.size(), ' ');
        for (std::size_t j = 0; j < t.cols.size(); ++j) {
            std::string v = std::to_string(t.entries[i][j]);
            os << ' ' << std::string(col_w[j] - v.size(), ' ') << v;
        }
        os << '\n';
    }
    return os.str();
}

std::string table_to_csv(const CoeffTable& t) {
    std::ostringstream os;
    os << "lambda";
    for (const auto& c : t.cols) os << ',' << format_partition_plus(c);
    os << '\n';
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        os << format_partition_plus(t.rows[i]);
        for (std::size_t j = 0; j < t.cols.size(); ++j) os << ',' << t.entries[i][j];
        os << '\n';
    }
    return os.str();
}

nlohmann::json table_to_json(const CoeffTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& p : t.rows) rows.push_back(p.parts());
    nlohmann::json cols = nlohmann::json::array();
    for (const auto& p : t.cols) cols.push_back(p.parts());
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& row : t.entries) entries.push_back(row);
    return nlohmann::json{{"rows", rows}, {"cols", cols}, {"entries", entries}};
}

}  // namespace charpoly
