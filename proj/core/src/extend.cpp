#include "mforge/extend.hpp"

#include "mforge/parallel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace mforge {

namespace {

long long encode_column(const GaloisField& f, const std::vector<int>& v) {
    long long code = 0;
    for (int x : v) code = code * f.q() + x;
    return code;
}

}  // namespace

PGPointSet pg_points(int r, const GaloisField& f) {
    if (r < 1) throw std::invalid_argument("projective space needs r >= 1");
    long long count = 1;
    for (int i = 0; i < r; ++i) {
        count *= f.q();
        if (count > (1ll << 27)) throw std::invalid_argument("projective space too large");
    }
    PGPointSet out{r, f, {}};
    std::vector<int> v(r, 0);
    for (long long val = 0; val < count; ++val) {
        long long x = val;
        for (int i = r - 1; i >= 0; --i) {
            v[i] = static_cast<int>(x % f.q());
            x /= f.q();
        }
        int lead = 0;
        for (int e : v)
            if (e != 0) {
                lead = e;
                break;
            }
        if (lead == 1) out.points.push_back(v);
    }
    return out;
}

ExtensionReport extend_all(const StandardForm& a, int jobs) {
    const GaloisField& f = a.base.field();
    int r = a.r(), n = a.n();
    Matroid m = matroid_of_matrix(a.base);
    if (!m.simple()) throw std::invalid_argument("extension requires a simple matroid");
    if (!m.connected()) throw std::invalid_argument("extension requires a connected matroid");

    ExtensionReport report{a, 0, false, {}, {}};
    report.newLabel = *std::max_element(a.base.labels().begin(), a.base.labels().end()) + 1;

    std::set<long long> existing;
    LabeledMatrix normalized = normalize_columns(a.base);
    for (int j = 0; j < n; ++j) existing.insert(encode_column(f, normalized.column(j)));
    for (const auto& p : pg_points(r, f).points)
        if (!existing.count(encode_column(f, p))) report.candidates.push_back(p);

    int c = static_cast<int>(report.candidates.size());
    std::vector<LabeledMatrix> matrices;
    std::vector<Matroid> matroids;
    matrices.reserve(c);
    matroids.reserve(c);
    for (int i = 0; i < c; ++i) {
        matrices.push_back(a.base.with_column(report.candidates[i], report.newLabel));
        matroids.push_back(m);  // placeholder, filled in parallel below
    }
    parallel_for(c, jobs, [&](std::int64_t i) { matroids[i] = matroid_of_matrix(matrices[i]); });

    // labeled-equality groups: all extensions share one label sequence, so
    // identical basis masks mean identical labeled matroids
    std::map<std::vector<uint32_t>, int> groupOf;
    std::vector<std::vector<int>> groups;  // candidate indices
    for (int i = 0; i < c; ++i) {
        auto [it, inserted] = groupOf.try_emplace(matroids[i].bases(), static_cast<int>(groups.size()));
        if (inserted) groups.push_back({});
        groups[it->second].push_back(i);
    }
    // groups in least-member order
    std::vector<int> groupOrder(groups.size());
    for (size_t g = 0; g < groups.size(); ++g) groupOrder[g] = static_cast<int>(g);
    std::sort(groupOrder.begin(), groupOrder.end(),
              [&](int x, int y) { return groups[x][0] < groups[y][0]; });

    // isomorphism classes over group representatives
    std::vector<int> classOfGroup(groups.size(), -1);
    std::vector<int> classRepGroup;  // group index of each class representative
    for (int g : groupOrder) {
        const Matroid& candidate = matroids[groups[g][0]];
        for (size_t cls = 0; cls < classRepGroup.size(); ++cls) {
            if (find_isomorphism(candidate, matroids[groups[classRepGroup[cls]][0]])) {
                classOfGroup[g] = static_cast<int>(cls);
                break;
            }
        }
        if (classOfGroup[g] < 0) {
            classOfGroup[g] = static_cast<int>(classRepGroup.size());
            classRepGroup.push_back(g);
        }
    }

    for (size_t cls = 0; cls < classRepGroup.size(); ++cls) {
        ExtensionClass ec{static_cast<int>(cls),
                          matrices[groups[classRepGroup[cls]][0]],
                          matroids[groups[classRepGroup[cls]][0]],
                          {},
                          {},
                          {},
                          {},
                          0,
                          0};
        for (int g : groupOrder) {
            if (classOfGroup[g] != static_cast<int>(cls)) continue;
            std::vector<std::vector<int>> group;
            for (int i : groups[g]) group.push_back(report.candidates[i]);
            ec.projectiveRepCount = std::max(ec.projectiveRepCount,
                                             static_cast<int>(group.size()));
            ec.groups.push_back(std::move(group));
        }
        for (int i = 0; i < c; ++i) {
            if (classOfGroup[groupOf[matroids[i].bases()]] != static_cast<int>(cls)) continue;
            ec.columns.push_back(report.candidates[i]);
            ec.memberMatrices.push_back(matrices[i]);
        }
        ec.geometric = partition_by_equivalence(ec.memberMatrices, Relation::Geometric);
        ec.geometricRepCount = static_cast<int>(ec.geometric.classes.size());
        report.classes.push_back(std::move(ec));
    }
    return report;
}

ExtensionReport coextend_all(const StandardForm& a, int jobs) {
    StandardForm dual = dual_matrix(a);
    std::optional<ExtensionReport> dualReport;
    try {
        dualReport = extend_all(dual, jobs);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("coextension requires a cosimple, coconnected input (") +
                                    e.what() + ")");
    }
    // carry the class structure, dualize every matrix back
    ExtensionReport report = std::move(*dualReport);
    report.base = a;
    report.coextension = true;
    for (ExtensionClass& ec : report.classes) {
        ec.representativeMatrix = dual_matrix(as_standard_form(ec.representativeMatrix)).base;
        for (LabeledMatrix& member : ec.memberMatrices)
            member = dual_matrix(as_standard_form(member)).base;
        ec.representative = matroid_of_matrix(ec.representativeMatrix);
    }
    return report;
}

std::vector<StabilityRow> stability_probe(const ExtensionReport& report) {
    std::vector<StabilityRow> rows;
    for (const ExtensionClass& ec : report.classes)
        rows.push_back({ec.classId, ec.projectiveRepCount, ec.geometricRepCount});
    return rows;
}

std::vector<StabilityRow> stability_probe(const StandardForm& a, int jobs) {
    return stability_probe(extend_all(a, jobs));
}

std::vector<CatalogEntry> generate_catalog(const std::vector<StandardForm>& seeds, int nMax,
                                           int jobs) {
    std::vector<CatalogEntry> catalog;
    if (seeds.empty()) return catalog;
    const GaloisField& f = seeds[0].base.field();
    for (const StandardForm& s : seeds) {
        if (s.base.field() != f) throw std::invalid_argument("catalog seeds must share one field");
        Matroid m = matroid_of_matrix(s.base);
        if (!m.simple() || !m.connected())
            throw std::invalid_argument("catalog seeds must be simple and connected");
    }

    struct Item {
        StandardForm matrix;
        Matroid matroid;
        int parentId;
        std::vector<int> column;
    };
    std::map<int, std::vector<Item>> pending;  // by ground-set size
    for (const StandardForm& s : seeds)
        pending[s.n()].push_back({s, matroid_of_matrix(s.base), -1, {}});

    while (!pending.empty()) {
        auto levelIt = pending.begin();
        int levelN = levelIt->first;
        std::vector<Item> items = std::move(levelIt->second);
        pending.erase(levelIt);
        if (levelN > nMax) continue;

        // isomorphism dedup within the level, in discovery order
        std::vector<int> entryOfItem(items.size(), -1);
        std::vector<int> entryRepItem;
        for (size_t i = 0; i < items.size(); ++i) {
            for (size_t e = 0; e < entryRepItem.size(); ++e) {
                if (find_isomorphism(items[i].matroid, items[entryRepItem[e]].matroid)) {
                    entryOfItem[i] = static_cast<int>(e);
                    break;
                }
            }
            if (entryOfItem[i] < 0) {
                entryOfItem[i] = static_cast<int>(entryRepItem.size());
                entryRepItem.push_back(static_cast<int>(i));
            }
        }

        int firstIdOfLevel = catalog.empty() ? 0 : catalog.back().id + 1;
        for (size_t e = 0; e < entryRepItem.size(); ++e) {
            std::vector<LabeledMatrix> members;
            std::vector<int> memberItems;
            for (size_t i = 0; i < items.size(); ++i)
                if (entryOfItem[i] == static_cast<int>(e)) {
                    members.push_back(items[i].matrix.base);
                    memberItems.push_back(static_cast<int>(i));
                }
            ClassPartition geo = partition_by_equivalence(members, Relation::Geometric);
            CatalogEntry entry;
            entry.id = firstIdOfLevel + static_cast<int>(e);
            entry.n = levelN;
            entry.r = items[entryRepItem[e]].matroid.rank();
            entry.representative = items[entryRepItem[e]].matroid;
            for (const auto& cls : geo.classes)
                entry.representatives.push_back(items[memberItems[cls[0]]].matrix);
            entry.parentId = items[entryRepItem[e]].parentId;
            entry.extendingColumn = items[entryRepItem[e]].column;
            catalog.push_back(std::move(entry));
        }

        if (levelN + 1 > nMax) continue;
        for (int id = firstIdOfLevel; id <= catalog.back().id; ++id) {
            const CatalogEntry& entry = catalog[id];
            if (entry.n != levelN) continue;
            for (const StandardForm& rep : entry.representatives) {
                ExtensionReport ext = extend_all(rep, jobs);
                for (const ExtensionClass& ec : ext.classes)
                    for (size_t k = 0; k < ec.columns.size(); ++k)
                        pending[levelN + 1].push_back({as_standard_form(ec.memberMatrices[k]),
                                                       matroid_of_matrix(ec.memberMatrices[k]),
                                                       entry.id, ec.columns[k]});
            }
        }
    }
    return catalog;
}

}  // namespace mforge
