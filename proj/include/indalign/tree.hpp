#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

namespace indalign {

struct FitParams {
    int max_depth = 3;
    int min_samples_leaf = 2;
    int n_trees = 50;
    double feature_fraction = 1.0 / 3.0;  // per-node feature subset share
    std::uint64_t seed = 42;
    bool bootstrap = true;  // disable to make a 1-tree forest equal fit_tree

    void validate() const;
};

// CART node. Internal nodes route feature <= threshold to the left child.
struct TreeNode {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    std::unique_ptr<TreeNode> left;
    std::unique_ptr<TreeNode> right;
    double value = 0.0;  // leaf mean of training targets
    int sample_count = 0;

    bool is_leaf() const { return feature < 0; }
};

// Greedy variance-reduction CART. Candidate thresholds are midpoints between
// consecutive distinct sorted feature values; both children must keep
// min_samples_leaf samples. Fully deterministic: ties break on lowest
// feature index, then lowest threshold. Throws EmptyTrainingSet.
std::unique_ptr<TreeNode> fit_tree(const Eigen::Ref<const Eigen::MatrixXd>& features,
                                   const Eigen::Ref<const Eigen::VectorXd>& targets,
                                   const FitParams& params);

// Routes x through the tree. A NaN at a split feature throws MissingFeature.
double predict_tree(const TreeNode& tree, const Eigen::Ref<const Eigen::VectorXd>& x);

struct RandomForest {
    std::vector<std::unique_ptr<TreeNode>> trees;
    FitParams params;

    // Arithmetic mean of the trees' predictions.
    double predict(const Eigen::Ref<const Eigen::VectorXd>& x) const;
};

// Bagged CART: each tree fits a bootstrap resample (size = row count) drawn
// from an RNG seeded by (seed, tree index) and considers a per-node random
// subset of ceil(feature_fraction * F) features. Identical seed, identical forest.
RandomForest fit_forest(const Eigen::Ref<const Eigen::MatrixXd>& features,
                        const Eigen::Ref<const Eigen::VectorXd>& targets,
                        const FitParams& params);

struct ExplanationStep {
    std::string feature_id;
    int feature = -1;
    double threshold = 0.0;
    bool went_left = false;
    double feature_value = 0.0;
};

struct TreeTrace {
    std::vector<ExplanationStep> steps;
    double leaf_value = 0.0;
    int leaf_samples = 0;
};

// Decision path(s) behind one prediction. Replaying the trace reproduces the
// prediction exactly; for forests, per-tree traces plus their mean.
struct ExplanationTrace {
    std::vector<TreeTrace> tree_traces;
    double prediction = 0.0;
};

ExplanationTrace explain(const TreeNode& tree, const Eigen::Ref<const Eigen::VectorXd>& x,
                         const std::vector<std::string>& feature_ids = {});
ExplanationTrace explain(const RandomForest& forest, const Eigen::Ref<const Eigen::VectorXd>& x,
                         const std::vector<std::string>& feature_ids = {});

// Prediction the trace encodes (mean of per-tree leaf values).
double replay(const ExplanationTrace& trace);

// Human-readable rendering, e.g. "polite_expressions = 2 <= 2.5 -> left".
std::string render_trace(const ExplanationTrace& trace);

enum class ModelKind { Tree, Forest };

struct LooResult {
    double mae = 0.0;
    double rmse = 0.0;
    Eigen::VectorXd predictions;  // one held-out prediction per row
};

// Leave-one-out cross-validation; needs >= 2 rows (InsufficientSamples).
LooResult evaluate_loo(const Eigen::Ref<const Eigen::MatrixXd>& features,
                       const Eigen::Ref<const Eigen::VectorXd>& targets, const FitParams& params,
                       ModelKind kind);

// JSON (de)serialization; round-trips exactly, doubles included.
nlohmann::json tree_to_json(const TreeNode& tree);
std::unique_ptr<TreeNode> tree_from_json(const nlohmann::json& j);
nlohmann::json forest_to_json(const RandomForest& forest);
RandomForest forest_from_json(const nlohmann::json& j);
nlohmann::json params_to_json(const FitParams& params);
FitParams params_from_json(const nlohmann::json& j);

}  // namespace indalign
