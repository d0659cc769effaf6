#include "crossnest/setpart.hpp"

#include <algorithm>
#include <stdexcept>

namespace crossnest {

SetPartition::SetPartition(int n_, std::vector<std::vector<int>> blocks_)
    : n(n_), blocks(std::move(blocks_)) {
    if (n < 0) throw std::invalid_argument("SetPartition: n must be nonnegative");
    std::vector<char> seen(n + 1, 0);
    int covered = 0;
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1 || x > n)
                throw std::invalid_argument("SetPartition: element out of range");
            if (seen[x]) throw std::invalid_argument("SetPartition: repeated element");
            seen[x] = 1;
            ++covered;
        }
    }
    if (covered != n) throw std::invalid_argument("SetPartition: blocks must cover {1..n}");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
}

int SetPartition::block_of(int element) const {
    for (size_t i = 0; i < blocks.size(); ++i)
        for (int x : blocks[i])
            if (x == element) return (int)i;
    throw std::invalid_argument("block_of: element out of range");
}

ArcDiagram standard_rep(const SetPartition& p) {
    ArcDiagram d;
    d.n = p.n;
    d.enhanced = false;
    for (const auto& b : p.blocks)
        for (size_t i = 0; i + 1 < b.size(); ++i)
            d.arcs.emplace_back(b[i], b[i + 1]);
    std::sort(d.arcs.begin(), d.arcs.end());
    return d;
}

ArcDiagram enhanced_rep(const SetPartition& p) {
    ArcDiagram d = standard_rep(p);
    d.enhanced = true;
    for (const auto& b : p.blocks)
        if (b.size() == 1) d.arcs.emplace_back(b[0], b[0]);
    std::sort(d.arcs.begin(), d.arcs.end());
    return d;
}

SetPartition partition_from_arcs(const ArcDiagram& d) {
    std::vector<int> next(d.n + 1, 0);
    std::vector<char> is_right(d.n + 1, 0);
    for (auto [i, j] : d.arcs) {
        if (i < 1 || j > d.n || i > j)
            throw std::invalid_argument("partition_from_arcs: arc out of range");
        if (i == j) {
            if (!d.enhanced)
                throw std::invalid_argument("partition_from_arcs: loop in standard diagram");
            continue;
        }
        if (next[i])
            throw std::invalid_argument("partition_from_arcs: vertex is left endpoint twice");
        if (is_right[j])
            throw std::invalid_argument("partition_from_arcs: vertex is right endpoint twice");
        next[i] = j;
        is_right[j] = 1;
    }
    std::vector<std::vector<int>> blocks;
    for (int v = 1; v <= d.n; ++v) {
        if (is_right[v]) continue;  // not a chain start
        std::vector<int> b{v};
        int cur = v;
        while (next[cur]) {
            cur = next[cur];
            b.push_back(cur);
        }
        blocks.push_back(std::move(b));
    }
    return SetPartition(d.n, std::move(blocks));
}

std::set<int> min_set(const SetPartition& p) {
    std::set<int> s;
    for (const auto& b : p.blocks) s.insert(b.front());
    return s;
}

std::set<int> max_set(const SetPartition& p) {
    std::set<int> s;
    for (const auto& b : p.blocks) s.insert(b.back());
    return s;
}

bool is_complete_matching(const SetPartition& p) {
    for (const auto& b : p.blocks)
        if (b.size() != 2) return false;
    return true;
}

namespace {

SetPartition partition_from_rgs(int n, const std::vector<int>& rgs) {
    int k = 0;
    for (int v : rgs) k = std::max(k, v + 1);
    std::vector<std::vector<int>> blocks(k);
    for (int i = 0; i < n; ++i) blocks[rgs[i]].push_back(i + 1);
    return SetPartition(n, std::move(blocks));
}

// Shard key from the leading symbols of the restricted growth string.
int rgs_shard_key(const std::vector<int>& rgs) {
    int key = 0;
    for (size_t i = 1; i < rgs.size() && i <= 4; ++i) key = key * (int)(i + 1) + rgs[i];
    return key;
}

}  // namespace

void for_each_partition(int n, const std::function<bool(const SetPartition&)>& fn,
                        int shard, int num_shards) {
    if (n < 0) throw std::invalid_argument("for_each_partition: n must be nonnegative");
    if (num_shards < 1 || shard < 0 || shard >= num_shards)
        throw std::invalid_argument("for_each_partition: bad shard index or count");
    if (n == 0) {
        if (shard == 0) fn(SetPartition(0, {}));
        return;
    }
    std::vector<int> rgs(n, 0);  // rgs[0] = 0; rgs[i] <= 1 + max(prefix)
    while (true) {
        if (num_shards == 1 || rgs_shard_key(rgs) % num_shards == shard)
            if (!fn(partition_from_rgs(n, rgs))) return;
        // next string in lexicographic order
        int i = n - 1;
        for (; i >= 1; --i) {
            int mx = 0;
            for (int j = 0; j < i; ++j) mx = std::max(mx, rgs[j]);
            if (rgs[i] <= mx) break;  // can increment (stay <= mx+1)
            rgs[i] = 0;
        }
        if (i < 1) return;
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }
}

std::vector<SetPartition> all_partitions(int n, int shard, int num_shards) {
    std::vector<SetPartition> out;
    for_each_partition(n, [&](const SetPartition& p) {
        out.push_back(p);
        return true;
    }, shard, num_shards);
    return out;
}

namespace {

void matchings_rec(int n2, std::vector<char>& used, std::vector<std::vector<int>>& acc,
                   const std::function<bool(const SetPartition&)>& fn, bool& keep_going,
                   bool filter_first, int first_partner, int shard, int num_shards) {
    if (!keep_going) return;
    int a = 0;
    for (int v = 1; v <= n2; ++v)
        if (!used[v]) { a = v; break; }
    if (a == 0) {
        if (!fn(SetPartition(n2, acc))) keep_going = false;
        return;
    }
    used[a] = 1;
    for (int b = a + 1; b <= n2; ++b) {
        if (used[b]) continue;
        if (filter_first && a == 1 && (b - 2) % num_shards != shard) continue;
        used[b] = 1;
        acc.push_back({a, b});
        matchings_rec(n2, used, acc, fn, keep_going, filter_first, first_partner,
                      shard, num_shards);
        acc.pop_back();
        used[b] = 0;
        if (!keep_going) break;
    }
    used[a] = 0;
}

}  // namespace

void for_each_matching(int m, const std::function<bool(const SetPartition&)>& fn,
                       int shard, int num_shards) {
    if (m < 0) throw std::invalid_argument("for_each_matching: m must be nonnegative");
    if (num_shards < 1 || shard < 0 || shard >= num_shards)
        throw std::invalid_argument("for_each_matching: bad shard index or count");
    if (m == 0) {
        if (shard == 0) fn(SetPartition(0, {}));
        return;
    }
    std::vector<char> used(2 * m + 1, 0);
    std::vector<std::vector<int>> acc;
    bool keep_going = true;
    matchings_rec(2 * m, used, acc, fn, keep_going, num_shards > 1, 0, shard, num_shards);
}

std::vector<SetPartition> all_matchings(int m, int shard, int num_shards) {
    std::vector<SetPartition> out;
    for_each_matching(m, [&](const SetPartition& p) {
        out.push_back(p);
        return true;
    }, shard, num_shards);
    return out;
}

std::string format_partition(const SetPartition& p) {
    std::string out;
    if (p.n == 0) return "()";
    bool digits = p.n <= 9;
    for (size_t i = 0; i < p.blocks.size(); ++i) {
        if (i) out += '-';
        if (digits) {
            for (int x : p.blocks[i]) out += (char)('0' + x);
        } else {
            out += '[';
            for (size_t j = 0; j < p.blocks[i].size(); ++j) {
                if (j) out += ',';
                out += std::to_string(p.blocks[i][j]);
            }
            out += ']';
        }
    }
    return out;
}

SetPartition parse_partition(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_partition: empty text");
    if (text == "()") return SetPartition(0, {});
    std::vector<std::vector<int>> blocks;
    std::vector<int> cur;
    int n = 0;
    bool bracketed = text.find('[') != std::string::npos;
    if (!bracketed) {
        for (char c : text) {
            if (c == '-') {
                if (cur.empty()) throw std::invalid_argument("parse_partition: empty block");
                blocks.push_back(cur);
                cur.clear();
            } else if (c >= '1' && c <= '9') {
                cur.push_back(c - '0');
                n = std::max(n, c - '0');
            } else {
                throw std::invalid_argument("parse_partition: unexpected character");
            }
        }
        if (cur.empty()) throw std::invalid_argument("parse_partition: empty block");
        blocks.push_back(cur);
    } else {
        size_t i = 0;
        while (i < text.size()) {
            if (text[i] != '[')
                throw std::invalid_argument("parse_partition: expected '['");
            size_t close = text.find(']', i);
            if (close == std::string::npos)
                throw std::invalid_argument("parse_partition: unbalanced bracket");
            std::string body = text.substr(i + 1, close - i - 1);
            std::vector<int> b;
            size_t pos = 0;
            while (pos < body.size()) {
                size_t comma = body.find(',', pos);
                std::string tok = body.substr(pos, comma == std::string::npos
                                                       ? std::string::npos
                                                       : comma - pos);
                if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                    throw std::invalid_argument("parse_partition: bad integer");
                int v = std::stoi(tok);
                b.push_back(v);
                n = std::max(n, v);
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            if (b.empty()) throw std::invalid_argument("parse_partition: empty block");
            blocks.push_back(b);
            i = close + 1;
            if (i < text.size()) {
                if (text[i] != '-')
                    throw std::invalid_argument("parse_partition: expected '-'");
                ++i;
            }
        }
    }
    return SetPartition(n, std::move(blocks));  // validates cover of {1..n}
}

std::string format_set(const std::set<int>& s) {
    std::string out;
    for (int x : s) {
        if (!out.empty()) out += ',';
        out += std::to_string(x);
    }
    return out;
}

}  // namespace crossnest
