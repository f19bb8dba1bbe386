#include "hera/curve.hpp"

#include <sstream>

namespace hera {

std::vector<FieldElement> gamma_set(const Field& field, const FieldElement& alpha) {
    uint32_t q = field->subfield_q();
    FieldElement target = alpha.pow(q + 1);
    std::vector<FieldElement> out;
    for (uint32_t b = 0; b < field->order(); ++b) {
        FieldElement beta = field->element(b);
        if (beta.pow(q) + beta == target) out.push_back(beta);
    }
    return out;
}

CurveTable::CurveTable(Field field) : field_(std::move(field)), q_(field_->subfield_q()) {
    for (uint32_t a = 0; a < field_->order(); ++a) {
        FieldElement alpha = field_->element(a);
        auto gammas = gamma_set(field_, alpha);
        if (gammas.size() != q_) {
            std::ostringstream os;
            os << "|Gamma_alpha| = " << gammas.size() << " != q at enc(alpha)=" << a;
            throw HeraError(os.str());
        }
        for (const auto& beta : gammas) points_.push_back({alpha, beta});
    }
    // gamma_set iterates betas in encoding order and alphas ascend, so the
    // list is already lexicographic by (enc(alpha), enc(beta)).
    size_t expected = size_t(q_) * q_ * q_;
    if (points_.size() != expected) throw HeraError("curve point count != q^3");
}

bool CurveTable::on_curve(const FieldElement& alpha, const FieldElement& beta) const {
    return beta.pow(q_) + beta == alpha.pow(q_ + 1);
}

size_t CurveTable::index_of(const CurvePoint& p) const {
    for (size_t i = 0; i < points_.size(); ++i)
        if (points_[i] == p) return i;
    throw ParamError("point is not on the curve");
}

} // namespace hera
