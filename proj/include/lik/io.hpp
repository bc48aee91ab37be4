#pragma once

#include <map>
#include <string>

#include "lik/synth.hpp"

namespace lik {

/// Comma-separated rows, '.' decimal, no header, %.17g (round-trip exact).
void write_csv(const Matrix& m, const std::string& path);
Matrix read_csv(const std::string& path);

void write_meta(const std::map<std::string, std::string>& kv, const std::string& path);
std::map<std::string, std::string> read_meta(const std::string& path);

/// Writes Y.csv, X_f<j>.csv per feature slice, K_true.csv and meta.txt
/// (d, n, k, r, kernel, sigma_xi, seed) into dir.
void save_panel(const PanelData& panel, const LatentModel& model, const std::string& dir);

struct LoadedPanel {
    PanelData panel;                              // s left empty
    std::map<std::string, std::string> meta;
};

LoadedPanel load_panel(const std::string& dir);

std::string format_g17(double v);

}  // namespace lik
