#include <cstdio>
#include <map>
#include <string>

#include "graphda/model.hpp"

using namespace graphda;

int main(int argc, char** argv) {
  if (argc < 2) return 2;
  for (int a = 1; a < argc; ++a) {
    Checkpoint ck = load_checkpoint(argv[a]);
    const Mat& w1 = ck.params.generator.weights[0];
    std::map<std::string, std::pair<double, int>> groups;
    for (std::size_t i = 0; i < ck.meta.vocab.size(); ++i) {
      const std::string& name = ck.meta.vocab[i];
      std::string dom = "shared";
      std::string base = name;
      if (name.rfind("src.", 0) == 0) { dom = "srconly"; base = name.substr(4); }
      if (name.rfind("tgt.", 0) == 0) { dom = "tgtonly"; base = name.substr(4); }
      std::string kind = base.rfind("sig", 0) == 0 ? "sig" : "noise";
      auto& g = groups[dom + "/" + kind];
      g.first += w1.row(static_cast<Eigen::Index>(i)).norm();
      g.second += 1;
    }
    std::printf("%s\n", argv[a]);
    for (const auto& [k, v] : groups) {
      std::printf("  %-14s n=%3d mean-row-norm=%.4f\n", k.c_str(), v.second, v.first / v.second);
    }
  }
  return 0;
}
