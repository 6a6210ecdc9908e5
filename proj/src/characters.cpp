#include "charpoly/characters.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace charpoly {

namespace {

std::mutex g_tables_mutex;
std::map<int, std::shared_ptr<const CharacterTable>> g_tables;
std::string g_cache_dir;

std::string cache_path(const std::string& dir, int d) {
    return dir + "/chartable_d" + std::to_string(d) + ".json";
}

// Beta numbers of a partition padded to a fixed length: the strictly
// decreasing values lambda_i + (len - i).
std::vector<int> beta_numbers(const Partition& lambda, int len) {
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) {
        int part = i < lambda.length() ? lambda.part(i) : 0;
        beta[i] = part + (len - 1 - i);
    }
    return beta;
}

Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    int len = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
        int p = beta[i] - (len - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

using MnMemo = std::map<std::pair<Partition, int>, BigInt>;

// Murnaghan-Nakayama: remove a border strip of length alpha_parts[idx];
// removing a strip of length r moves one beta number from b to b - r, with
// sign (-1)^{number of beta numbers passed over}.
BigInt mn_recurse(const Partition& shape, const std::vector<int>& alpha_parts, int idx,
                  MnMemo& memo) {
    if (shape.empty()) return 1;
    auto key = std::make_pair(shape, idx);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int r = alpha_parts[idx];
    std::vector<int> beta = beta_numbers(shape, shape.length());
    BigInt total = 0;
    for (int b : beta) {
        if (b < r) continue;
        if (std::find(beta.begin(), beta.end(), b - r) != beta.end()) continue;
        int height = 0;
        for (int c : beta)
            if (b - r < c && c < b) ++height;
        std::vector<int> nb;
        nb.reserve(beta.size());
        for (int c : beta) nb.push_back(c == b ? b - r : c);
        BigInt sub = mn_recurse(partition_from_beta(std::move(nb)), alpha_parts, idx + 1, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

CharacterTable compute_character_table(int d) {
    CharacterTable t;
    t.degree_ = d;
    t.index_ = partitions_of(d);
    int n = static_cast<int>(t.index_.size());
    t.values_.assign(n, std::vector<BigInt>(n));
    for (int ai = 0; ai < n; ++ai) {
        MnMemo memo;  // shared across lambda for a fixed alpha
        const auto& alpha_parts = t.index_[ai].parts();
        for (int li = 0; li < n; ++li)
            t.values_[li][ai] = mn_recurse(t.index_[li], alpha_parts, 0, memo);
    }
    return t;
}

const BigInt& CharacterTable::value(int lambda_idx, int alpha_idx) const {
    return values_.at(lambda_idx).at(alpha_idx);
}

int CharacterTable::index_of(const Partition& p) const {
    auto it = std::find(index_.begin(), index_.end(), p);
    return it == index_.end() ? -1 : static_cast<int>(it - index_.begin());
}

const BigInt& CharacterTable::value(const Partition& lambda, const Partition& alpha) const {
    int li = index_of(lambda), ai = index_of(alpha);
    if (li < 0 || ai < 0) throw std::invalid_argument("CharacterTable: partition of wrong size");
    return values_[li][ai];
}

void CharacterTable::set_cache_dir(std::string dir) {
    std::lock_guard<std::mutex> lock(g_tables_mutex);
    g_cache_dir = std::move(dir);
}

std::string CharacterTable::cache_dir() {
    std::lock_guard<std::mutex> lock(g_tables_mutex);
    return g_cache_dir;
}

namespace {

void save_table(const std::string& dir, const CharacterTable& t) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    nlohmann::json entries = nlohmann::json::object();
    int n = static_cast<int>(t.index().size());
    for (int li = 0; li < n; ++li)
        for (int ai = 0; ai < n; ++ai) {
            std::string key =
                format_partition(t.index()[li]) + "|" + format_partition(t.index()[ai]);
            entries[key] = t.value(li, ai).str();
        }
    nlohmann::json j{{"d", t.degree()}, {"entries", entries}};
    std::ofstream out(cache_path(dir, t.degree()));
    if (out) out << j.dump(1) << "\n";
}

}  // namespace

std::shared_ptr<const CharacterTable> CharacterTable::get(int d) {
    if (d < 0) throw std::invalid_argument("CharacterTable: negative degree");
    std::lock_guard<std::mutex> lock(g_tables_mutex);
    if (auto it = g_tables.find(d); it != g_tables.end()) return it->second;

    std::shared_ptr<CharacterTable> table;
    if (!g_cache_dir.empty()) {
        // Disk cache; fall back to computing on any inconsistency.
        std::ifstream in(cache_path(g_cache_dir, d));
        nlohmann::json j;
        bool ok = bool(in);
        if (ok) {
            try {
                in >> j;
            } catch (const nlohmann::json::exception&) {
                ok = false;
            }
        }
        ok = ok && j.is_object() && j.value("d", -1) == d && j.contains("entries") &&
             j["entries"].is_object();
        if (ok) {
            auto t = std::make_shared<CharacterTable>();
            t->degree_ = d;
            t->index_ = partitions_of(d);
            int n = static_cast<int>(t->index_.size());
            t->values_.assign(n, std::vector<BigInt>(n));
            const auto& entries = j["entries"];
            for (int li = 0; li < n && ok; ++li)
                for (int ai = 0; ai < n && ok; ++ai) {
                    std::string key = format_partition(t->index_[li]) + "|" +
                                      format_partition(t->index_[ai]);
                    auto it = entries.find(key);
                    if (it == entries.end() || !it->is_string())
                        ok = false;
                    else
                        t->values_[li][ai] = BigInt(it->get<std::string>());
                }
            if (ok) table = t;
        }
    }
    if (!table) {
        table = std::make_shared<CharacterTable>(compute_character_table(d));
        if (!g_cache_dir.empty()) save_table(g_cache_dir, *table);
    }
    g_tables.emplace(d, table);
    return table;
}

BigInt mn_character(const Partition& lambda, const Partition& alpha) {
    if (lambda.size() != alpha.size())
        throw std::invalid_argument("mn_character: |lambda| must equal |alpha|");
    return CharacterTable::get(lambda.size())->value(lambda, alpha);
}

BigInt sigma_character(const Partition& lambda, const Partition& alpha) {
    if (lambda.size() != alpha.size())
        throw std::invalid_argument("sigma_character: |lambda| must equal |alpha|");
    // Count arrays (b_ij) where row i uses b_ij cycles of length j with
    // sum_j j*b_ij = lambda_i, weighted by the multinomial ways of picking
    // which of the a_j available j-cycles land in each row.
    std::map<int, int> remaining = alpha.exponential_form();
    std::vector<int> sizes;
    sizes.reserve(remaining.size());
    for (auto& [j, a] : remaining) sizes.push_back(j);

    auto row_rec = [&](auto&& self, int row) -> BigInt {
        if (row == lambda.length()) return 1;  // leftovers are zero by size count
        BigInt total = 0;
        auto walk = [&](auto&& walker, std::size_t si, int left, const BigInt& ways) -> void {
            if (left == 0) {
                total += ways * self(self, row + 1);
                return;
            }
            if (si == sizes.size()) return;
            int j = sizes[si];
            int avail = remaining[j];
            int maxb = std::min(avail, left / j);
            for (int b = 0; b <= maxb; ++b) {
                remaining[j] = avail - b;
                walker(walker, si + 1, left - j * b, ways * binomial(BigInt(avail), b));
                remaining[j] = avail;
            }
        };
        walk(walk, 0, lambda.part(row), BigInt(1));
        return total;
    };
    return row_rec(row_rec, 0);
}

}  // namespace charpoly
