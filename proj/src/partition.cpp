#include "charpoly/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace charpoly {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

std::map<int, int> Partition::exponential_form() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
}

Partition Partition::from_exponential(const std::map<int, int>& mult) {
    std::vector<int> parts;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
        if (it->second < 0) throw std::invalid_argument("Partition: negative multiplicity");
        if (it->first <= 0 && it->second > 0)
            throw std::invalid_argument("Partition: nonpositive part size");
        parts.insert(parts.end(), it->second, it->first);
    }
    return Partition(std::move(parts));
}

int ExponentialForm::size() const {
    int s = 0;
    for (auto& [i, a] : multiplicities) s += i * a;
    return s;
}

bool revlex_less(const Partition& a, const Partition& b) {
    // Lexicographically larger part vector comes first.
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

bool PartitionLess::operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return revlex_less(a, b);
}

namespace {
void enumerate(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        enumerate(n - k, k, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    enumerate(n, n, cur, out);
    if (n == 0) out = {Partition()};
    return out;
}

std::vector<Partition> partitions_up_to(int max) {
    std::vector<Partition> out;
    for (int n = 0; n <= max; ++n) {
        auto block = partitions_of(n);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

BigInt z_alpha(const Partition& alpha) {
    BigInt z = 1;
    for (auto& [i, a] : alpha.exponential_form()) {
        for (int t = 0; t < a; ++t) z *= i;
        z *= factorial(a);
    }
    return z;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> parts;
    for (int i = 1; i <= lambda.largest(); ++i) {
        int c = 0;
        for (int p : lambda.parts())
            if (p >= i) ++c;
        parts.push_back(c);
    }
    return Partition(std::move(parts));
}

Partition pad(const Partition& mu, int n) {
    if (n < mu.size() + mu.largest())
        throw std::invalid_argument("pad: n must be at least |mu| + mu_1");
    std::vector<int> parts;
    if (n - mu.size() > 0) parts.push_back(n - mu.size());  // mu empty, n = 0 pads to empty
    parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
    return Partition(std::move(parts));
}

std::vector<Partition> vertical_strip_subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    int l = lambda.length();
    std::vector<int> cur;
    // Row-wise 0/1 removals, keeping each prefix weakly decreasing.
    auto rec = [&](auto&& self, int row) -> void {
        if (row == l) {
            std::vector<int> parts;
            for (int p : cur)
                if (p > 0) parts.push_back(p);
            out.push_back(Partition(std::move(parts)));
            return;
        }
        for (int remove = 0; remove <= 1; ++remove) {
            int p = lambda.part(row) - remove;
            if (p < 0) continue;
            if (row > 0 && p > cur[row - 1]) continue;
            cur.push_back(p);
            self(self, row + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

Partition parse_partition(std::string_view s) {
    if (s == "0" || s == "empty" || s.empty()) return Partition();
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto comma = s.find(',', pos);
        std::string_view tok = s.substr(pos, comma == std::string_view::npos ? s.size() - pos
                                                                             : comma - pos);
        if (tok.empty()) throw std::invalid_argument("partition: empty component");
        int v = 0;
        for (char c : tok) {
            if (c < '0' || c > '9') throw std::invalid_argument("partition: bad character");
            v = v * 10 + (c - '0');
            if (v > 1000000) throw std::invalid_argument("partition: part too large");
        }
        parts.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));  // validates order/positivity
}

namespace {
std::string join_parts(const Partition& p, char sep) {
    if (p.empty()) return "0";
    std::string out;
    for (int i = 0; i < p.length(); ++i) {
        if (i) out += sep;
        out += std::to_string(p.part(i));
    }
    return out;
}
}  // namespace

std::string format_partition(const Partition& p) { return join_parts(p, ','); }
std::string format_partition_plus(const Partition& p) { return join_parts(p, '+'); }

}  // namespace charpoly
