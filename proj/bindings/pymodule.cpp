// Python bindings for the core operations: synthetic pair generation, data
// loading and alignment, training both variants with or without the
// adversary, scoring, and checkpoint round trips. Matrices cross the
// boundary as numpy arrays (dense) or scipy CSR (sparse).

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphda/config.hpp"
#include "graphda/data.hpp"
#include "graphda/eval.hpp"
#include "graphda/graph.hpp"
#include "graphda/model.hpp"
#include "graphda/objective.hpp"
#include "graphda/rng.hpp"
#include "graphda/trainer.hpp"

namespace py = pybind11;
using namespace graphda;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cross-network node classification with adversarial alignment";

  // Specific translators are registered after the base so they match first.
  py::register_exception<Error>(m, "GraphdaError", PyExc_RuntimeError);
  py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigurationError", PyExc_ValueError);
  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
  py::register_exception<RangeError>(m, "RangeError", PyExc_IndexError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::enum_<Variant>(m, "Variant")
      .value("gcn", Variant::Gcn)
      .value("igcn", Variant::Igcn);
  py::enum_<TaskMode>(m, "TaskMode")
      .value("multi_label", TaskMode::MultiLabel)
      .value("multi_class", TaskMode::MultiClass);
  py::enum_<ad::Activation>(m, "Activation")
      .value("relu", ad::Activation::Relu)
      .value("sigmoid", ad::Activation::Sigmoid)
      .value("tanh", ad::Activation::Tanh);

  py::class_<DecaySchedule>(m, "DecaySchedule")
      .def(py::init<>())
      .def_readwrite("start", &DecaySchedule::start)
      .def_readwrite("period", &DecaySchedule::period)
      .def_readwrite("factor", &DecaySchedule::factor);

  py::class_<TrainConfig>(m, "TrainConfig")
      .def(py::init<>())
      .def_readwrite("lambda_", &TrainConfig::lambda)
      .def_readwrite("gamma", &TrainConfig::gamma)
      .def_readwrite("critic_steps", &TrainConfig::critic_steps)
      .def_readwrite("smoothing", &TrainConfig::smoothing)
      .def_readwrite("critic_lr", &TrainConfig::critic_lr)
      .def_readwrite("model_lr", &TrainConfig::model_lr)
      .def_readwrite("epochs", &TrainConfig::epochs)
      .def_readwrite("dropout", &TrainConfig::dropout)
      .def_readwrite("weight_decay", &TrainConfig::weight_decay)
      .def_readwrite("widths", &TrainConfig::widths)
      .def_readwrite("variant", &TrainConfig::variant)
      .def_readwrite("mode", &TrainConfig::mode)
      .def_readwrite("seed", &TrainConfig::seed)
      .def_readwrite("decay", &TrainConfig::decay)
      .def_readwrite("hidden_activation", &TrainConfig::hidden_activation)
      .def_readwrite("output_activation", &TrainConfig::output_activation)
      .def_readwrite("critic_activation", &TrainConfig::critic_activation)
      .def_readwrite("eval_every", &TrainConfig::eval_every)
      .def("validate", &TrainConfig::validate);

  py::class_<SyntheticConfig>(m, "SyntheticConfig")
      .def(py::init<>())
      .def_readwrite("nodes", &SyntheticConfig::nodes)
      .def_readwrite("labels", &SyntheticConfig::labels)
      .def_readwrite("p_in", &SyntheticConfig::p_in)
      .def_readwrite("p_out", &SyntheticConfig::p_out)
      .def_readwrite("signature_attrs", &SyntheticConfig::signature_attrs)
      .def_readwrite("noise_attrs", &SyntheticConfig::noise_attrs)
      .def_readwrite("q_signature_source", &SyntheticConfig::q_signature_source)
      .def_readwrite("q_signature_target", &SyntheticConfig::q_signature_target)
      .def_readwrite("q_noise_source", &SyntheticConfig::q_noise_source)
      .def_readwrite("q_noise_target", &SyntheticConfig::q_noise_target)
      .def_readwrite("common_attribute_rate", &SyntheticConfig::common_attribute_rate)
      .def_readwrite("label_overlap", &SyntheticConfig::label_overlap)
      .def_readwrite("seed", &SyntheticConfig::seed)
      .def("validate", &SyntheticConfig::validate);

  py::class_<AttributedNetwork>(m, "AttributedNetwork")
      .def(py::init<>())
      .def_readonly("node_count", &AttributedNetwork::node_count)
      .def_readonly("label_count", &AttributedNetwork::label_count)
      .def_readonly("attribute_vocab", &AttributedNetwork::attribute_vocab)
      .def_property_readonly("adjacency",
                             [](const AttributedNetwork& n) { return n.adjacency; })
      .def_property_readonly("features",
                             [](const AttributedNetwork& n) { return n.features; })
      .def_readonly("labels", &AttributedNetwork::labels)
      .def_readwrite("labeled_set", &AttributedNetwork::labeled_set)
      .def("truth_labeled_nodes", &AttributedNetwork::truth_labeled_nodes)
      .def("validate", &AttributedNetwork::validate);

  py::class_<GraphFilter>(m, "GraphFilter")
      .def_property_readonly("matrix", [](const GraphFilter& f) { return f.matrix; })
      .def_readwrite("exponent", &GraphFilter::exponent);

  py::class_<DomainPair>(m, "DomainPair")
      .def(py::init<>())
      .def_readwrite("source", &DomainPair::source)
      .def_readwrite("target", &DomainPair::target)
      .def_readonly("union_vocab", &DomainPair::union_vocab)
      .def("label_count", &DomainPair::label_count)
      .def("common_attribute_rate", &DomainPair::common_attribute_rate);

  py::class_<GeneratorParams>(m, "GeneratorParams")
      .def_readonly("weights", &GeneratorParams::weights);
  py::class_<ClassifierParams>(m, "ClassifierParams")
      .def_readonly("weight", &ClassifierParams::weight)
      .def_readonly("bias", &ClassifierParams::bias);
  py::class_<CriticParams>(m, "CriticParams")
      .def_readonly("w1", &CriticParams::w1)
      .def_readonly("b1", &CriticParams::b1)
      .def_readonly("w2", &CriticParams::w2)
      .def_readonly("b2", &CriticParams::b2);
  py::class_<ModelParams>(m, "ModelParams")
      .def_readonly("generator", &ModelParams::generator)
      .def_readonly("classifier", &ModelParams::classifier)
      .def_readonly("critic", &ModelParams::critic);

  py::class_<CheckpointMeta>(m, "CheckpointMeta")
      .def_readonly("variant", &CheckpointMeta::variant)
      .def_readonly("mode", &CheckpointMeta::mode)
      .def_readonly("smoothing", &CheckpointMeta::smoothing)
      .def_readonly("widths", &CheckpointMeta::widths)
      .def_readonly("label_count", &CheckpointMeta::label_count)
      .def_readonly("vocab", &CheckpointMeta::vocab);
  py::class_<Checkpoint>(m, "Checkpoint")
      .def(py::init([](const CheckpointMeta& meta, const ModelParams& params) {
             return Checkpoint{meta, params};
           }),
           py::arg("meta"), py::arg("params"))
      .def_readonly("meta", &Checkpoint::meta)
      .def_readonly("params", &Checkpoint::params);

  py::class_<LossReport>(m, "LossReport")
      .def_readonly("classification", &LossReport::classification)
      .def_readonly("domain", &LossReport::domain)
      .def_readonly("gradient_penalty", &LossReport::gradient_penalty);
  py::class_<EpochRecord>(m, "EpochRecord")
      .def_readonly("epoch", &EpochRecord::epoch)
      .def_readonly("losses", &EpochRecord::losses)
      .def_readonly("lr", &EpochRecord::lr)
      .def_readonly("micro_f1", &EpochRecord::micro_f1)
      .def_readonly("macro_f1", &EpochRecord::macro_f1);
  py::class_<TrainResult>(m, "TrainResult")
      .def_readonly("params", &TrainResult::params)
      .def_readonly("history", &TrainResult::history)
      .def_readonly("meta", &TrainResult::meta);
  py::class_<EvalSnapshot>(m, "EvalSnapshot")
      .def_readonly("micro", &EvalSnapshot::micro)
      .def_readonly("macro", &EvalSnapshot::macro)
      .def_readonly("node_count", &EvalSnapshot::node_count);

  m.def("generate_pair", &generate_pair, py::arg("config"),
        "Deterministic synthetic source/target pair from one config");
  m.def("load_network", &load_network, py::arg("edges_path"), py::arg("features_path"),
        py::arg("labels_path"));
  m.def("save_network", &save_network, py::arg("network"), py::arg("edges_path"),
        py::arg("features_path"), py::arg("labels_path"));
  m.def("align_attributes", &align_attributes, py::arg("source"), py::arg("target"),
        "Reindex both feature matrices onto the sorted union vocabulary");
  m.def("sample_labeled", &sample_labeled, py::arg("network"), py::arg("rate"),
        py::arg("seed"), "Label-covering visible subset, deterministic in the seed");
  m.def("reduce_common_attributes", &reduce_common_attributes, py::arg("pair"),
        py::arg("target_rate"), py::arg("seed"));
  m.def("renormalized_filter", &renormalized_filter, py::arg("network"));
  m.def("derive_seed", &derive_seed, py::arg("seed"), py::arg("tag"));

  m.def(
      "train",
      [](const DomainPair& pair, const TrainConfig& cfg) { return train(pair, cfg); },
      py::arg("pair"), py::arg("config"), py::call_guard<py::gil_scoped_release>(),
      "Adversarial training; per epoch, critic ascent steps then one model step");
  m.def("train_no_adversary", &train_no_adversary, py::arg("pair"), py::arg("config"),
        py::call_guard<py::gil_scoped_release>(),
        "Plain semi-supervised training with the identical pipeline");

  m.def("embed_nodes", &embed_nodes, py::arg("params"), py::arg("config"), py::arg("filter"),
        py::arg("features"));
  m.def("predict_scores", &predict_scores, py::arg("params"), py::arg("config"),
        py::arg("filter"), py::arg("features"));
  m.def("threshold_predict", &threshold_predict, py::arg("scores"), py::arg("mode"),
        "Labels above 0.5, falling back to the top score; argmax for multi-class");
  m.def("micro_f1", &micro_f1, py::arg("predicted"), py::arg("truth"), py::arg("label_count"));
  m.def("macro_f1", &macro_f1, py::arg("predicted"), py::arg("truth"), py::arg("label_count"));
  m.def("eval_config", &eval_config, py::arg("meta"));
  m.def("evaluate_held_out", &evaluate_during_training, py::arg("params"), py::arg("config"),
        py::arg("pair"), py::arg("target_filter"),
        "Target micro/macro F1 on truth-labeled nodes hidden from training");
  m.def("export_embeddings", &export_embeddings, py::arg("params"), py::arg("config"),
        py::arg("pair"), py::arg("path"));

  m.def("save_checkpoint", &save_checkpoint, py::arg("path"), py::arg("checkpoint"));
  m.def("load_checkpoint", &load_checkpoint, py::arg("path"));

  m.attr("__version__") = kToolVersion;
}
