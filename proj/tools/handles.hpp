#pragma once

#include <memory>

#include "lik.h"

namespace likcli {

struct HandleDeleter {
    void operator()(lik_matrix* p) const { lik_matrix_destroy(p); }
    void operator()(lik_model* p) const { lik_model_destroy(p); }
    void operator()(lik_panel* p) const { lik_panel_destroy(p); }
    void operator()(lik_gram_estimate* p) const { lik_gram_estimate_destroy(p); }
    void operator()(lik_partition* p) const { lik_partition_destroy(p); }
    void operator()(lik_piecewise_g* p) const { lik_piecewise_g_destroy(p); }
    void operator()(lik_boosted_model* p) const { lik_boosted_model_destroy(p); }
    void operator()(lik_eval_report* p) const { lik_eval_report_destroy(p); }
};

template <typename T>
using Handle = std::unique_ptr<T, HandleDeleter>;

using MatrixHandle = Handle<lik_matrix>;
using ModelHandle = Handle<lik_model>;
using PanelHandle = Handle<lik_panel>;
using GramHandle = Handle<lik_gram_estimate>;
using PartitionHandle = Handle<lik_partition>;
using PiecewiseHandle = Handle<lik_piecewise_g>;
using BoostHandle = Handle<lik_boosted_model>;
using ReportHandle = Handle<lik_eval_report>;

}  // namespace likcli
