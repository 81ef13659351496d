#pragma once

#include <vector>

#include "tmw/field/number_field.hpp"
#include "tmw/numeric/real_roots.hpp"

namespace tmw {

// Real embeddings of a totally real field, roots in ascending order (1-based labels).
class RealEmbeddings {
public:
    RealEmbeddings(FieldPtr k, long precision) : k_(std::move(k)), prec_(precision) {
        roots_ = real_roots(k_->poly(), precision + kGuard);
        if (static_cast<int>(roots_.size()) != k_->degree()) throw DomainError(k_->name() + " is not totally real");
    }

    long precision() const { return prec_; }
    int count() const { return static_cast<int>(roots_.size()); }
    const FieldPtr& field() const { return k_; }
    const FixedReal& root(int i) const { return roots_.at(i - 1); }

    // x at the i-th embedding; the error radius is checked against the requested precision.
    FixedReal conjugate(const FieldElement& x, int i) const {
        FixedReal v = eval_at(x, root(i));
        if (v.radius() > make_rat(1, pow10(prec_))) throw PrecisionError("embedding precision insufficient for this element");
        return v.with_precision(prec_ + kGuard / 2);
    }

    std::vector<FixedReal> conjugates(const FieldElement& x) const {
        std::vector<FixedReal> out;
        for (int i = 1; i <= count(); ++i) out.push_back(conjugate(x, i));
        return out;
    }

    static constexpr long kGuard = 40;

private:
    FieldPtr k_;
    long prec_;
    std::vector<FixedReal> roots_;
};

inline FixedReal real_conjugate(const FieldElement& x, int i, long precision) {
    return RealEmbeddings(x.field(), precision).conjugate(x, i);
}

}  // namespace tmw
