#include "skyrank/prefs.hpp"

namespace skyrank {

namespace {

void check_attr_index(const Dataset& d, Eigen::Index attr_index) {
    if (attr_index < 0 || attr_index >= d.n_dims())
        throw ParameterError("attribute index " + std::to_string(attr_index) +
                             " out of range for " + std::to_string(d.n_dims()) +
                             " attributes");
}

}  // namespace

Dataset invert_attribute(const Dataset& d, Eigen::Index attr_index) {
    check_attr_index(d, attr_index);
    for (Eigen::Index i = 0; i < d.n_rows(); ++i)
        if (!(d.values(i, attr_index) > 0.0))
            throw DomainError(
                "cannot invert attribute '" +
                d.attribute_names[static_cast<std::size_t>(attr_index)] +
                "': row id " +
                std::to_string(d.row_ids[static_cast<std::size_t>(i)]) +
                " holds non-positive value " +
                std::to_string(d.values(i, attr_index)));
    Dataset out = d;
    out.values.col(attr_index) = d.values.col(attr_index).cwiseInverse();
    return out;
}

Dataset complement_attribute(const Dataset& d, Eigen::Index attr_index,
                             ComplementMode mode) {
    check_attr_index(d, attr_index);
    if (d.n_rows() == 0)
        throw DegenerateInputError("cannot complement an empty attribute");
    Dataset out = d;
    const double sup = d.values.col(attr_index).maxCoeff();
    if (mode == ComplementMode::SupOnly) {
        out.values.col(attr_index) =
            Eigen::VectorXd::Constant(d.n_rows(), sup) - d.values.col(attr_index);
    } else {
        const double inf = d.values.col(attr_index).minCoeff();
        out.values.col(attr_index) = Eigen::VectorXd::Constant(d.n_rows(), inf + sup) -
                                     d.values.col(attr_index);
    }
    return out;
}

UnifiedDataset unify(const Dataset& d, const PreferenceSpec& p, Direction target) {
    if (p.size() != d.n_dims())
        throw ContractError("preference count does not match attribute count");
    UnifiedDataset out;
    out.dataset = d;
    out.target_direction = target;
    out.transform_log.assign(static_cast<std::size_t>(d.n_dims()),
                             AttributeTransform::Identity);
    for (Eigen::Index j = 0; j < d.n_dims(); ++j) {
        if (p.dirs[static_cast<std::size_t>(j)] == target) continue;
        out.dataset = invert_attribute(out.dataset, j);
        out.transform_log[static_cast<std::size_t>(j)] = AttributeTransform::Inversion;
    }
    return out;
}

}  // namespace skyrank
