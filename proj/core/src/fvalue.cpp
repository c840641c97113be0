#include "ep/engine/fvalue.hpp"

#include "ep/errors.hpp"
#include "ep/gf2/ops.hpp"
#include "ep/rep/actions.hpp"

#include <sstream>
#include <stdexcept>

namespace ep::engine {

std::string Verdict::kind_string() const {
    switch (kind) {
    case Kind::EP:
        return "EP";
    case Kind::NotEP:
        return "notEP";
    case Kind::Inconclusive:
        return "inconclusive";
    }
    return {};
}

FValueReport f_value(std::span<const MaximalClassRecord> classes, const rep::ModuleTag& tag,
                     std::size_t d) {
    if (classes.empty())
        throw std::invalid_argument("f_value: class list is empty");
    FValueReport report;
    report.d = d;
    report.total = 0;
    for (const auto& cls : classes) {
        const rep::ModuleTag& use = cls.module_tag == rep::ModuleTag::natural() &&
                                            !(tag == rep::ModuleTag::natural())
                                        ? tag
                                        : cls.module_tag;
        if (cls.class_size < 1)
            throw data_error("f_value: class '" + cls.label + "' has class size < 1");
        std::vector<gf2::BitMatrix> induced;
        induced.reserve(cls.generators.size());
        for (const auto& g : cls.generators) {
            if (!g.is_square())
                throw std::invalid_argument("f_value: non-square generator in '" + cls.label + "'");
            if (!g.is_invertible())
                throw data_error("f_value: non-invertible generator in '" + cls.label + "'");
            auto m = rep::induce(g, use);
            if (m.rows() != d)
                throw std::invalid_argument("f_value: induced dimension " +
                                            std::to_string(m.rows()) + " != d = " +
                                            std::to_string(d) + " in '" + cls.label + "'");
            induced.push_back(std::move(m));
        }
        auto fix = gf2::common_fixed_space(d, induced);
        // The half-dimension bound needs a distinct conjugate, so it only
        // constrains non-normal classes.
        if (cls.class_size >= 2 && fix.dim() > d / 2)
            throw data_error("f_value: class '" + cls.label + "' has fix dim " +
                             std::to_string(fix.dim()) + " > floor(d/2); data integrity error");
        ClassContribution c;
        c.label = cls.label;
        c.class_size = cls.class_size;
        c.fix_dim = fix.dim();
        c.contribution = cls.class_size * pow2_minus_1(fix.dim());
        report.total += c.contribution;
        report.per_class.push_back(std::move(c));
    }
    return report;
}

Verdict lemma_verdict(const Nat& f, std::size_t d) {
    const Nat target = pow2_minus_1(d);
    if (f > target)
        throw data_error("lemma_verdict: f = " + f.str() + " exceeds 2^d-1 = " + target.str() +
                         "; class data is corrupt or over-complete");
    Verdict v;
    v.certificate = FEqualityCertificate{f, target};
    if (f == target) {
        v.kind = Verdict::Kind::EP;
        v.detail = "f = 2^d-1 = " + target.str();
    } else {
        v.kind = Verdict::Kind::NotEP;
        v.detail = "f = " + f.str() + " < 2^d-1 = " + target.str();
    }
    return v;
}

Verdict dataset_verdict(const MaximalDataset& dataset, const FValueReport& report) {
    const Nat target = pow2_minus_1(report.d);
    if (dataset.complete)
        return lemma_verdict(report.total, report.d);
    // Incomplete data: the true f is at least the computed total.
    if (report.total > target)
        throw data_error("dataset_verdict: partial f already exceeds 2^d-1");
    Verdict v;
    if (dataset.missing_bound && report.total + *dataset.missing_bound < target) {
        v.kind = Verdict::Kind::NotEP;
        v.certificate = BoundCertificate{
            report.total.str() + " + " + dataset.missing_bound->str() + " < " + target.str(),
            report.total + *dataset.missing_bound, target, true};
        v.detail = "partial f plus declared missing bound stays below 2^d-1";
    } else {
        v.kind = Verdict::Kind::Inconclusive;
        v.detail = "dataset incomplete; equality criterion needs all of M(H)";
    }
    return v;
}

} // namespace ep::engine
