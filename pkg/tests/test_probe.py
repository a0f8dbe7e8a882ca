# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Linear-probe evaluation."""

import csv
import json

import numpy as np
import pytest

from GraphILBO.encoder import init_params
from GraphILBO.errors import EvaluationError
from GraphILBO.probe import EvalReport, ProbeConfig, accuracy, \
    linear_probe, softmax_cross_entropy
from GraphILBO.trainer import embed


@pytest.fixture
def labelled():
    labels = np.array([0, 1, 2] * 10)
    splits = {'train': np.arange(0, 24), 'val': np.array([], dtype=int),
              'test': np.arange(24, 30)}
    return labels, splits


class TestAccuracy:

    def test_all_correct(self):
        assert accuracy([0, 1, 2], [0, 1, 2], [0, 1, 2]) == 1.0

    def test_all_wrong(self):
        assert accuracy([1, 2, 0], [0, 1, 2], [0, 1, 2]) == 0.0

    def test_three_of_four(self):
        assert accuracy([0, 1, 1, 3], [0, 1, 2, 3], [0, 1, 2, 3]) == 0.75

    def test_only_indexed_nodes_count(self):
        assert accuracy([9, 1, 2], [0, 1, 2], [1, 2]) == 1.0

    def test_permuting_nodes_with_labels(self):
        rng = np.random.default_rng(4)
        predictions = rng.integers(0, 3, 20)
        labels = rng.integers(0, 3, 20)
        index = rng.choice(20, 12, replace=False)
        order = rng.permutation(20)
        inverse = np.argsort(order)
        assert accuracy(predictions[order], labels[order], inverse[index]) \
            == accuracy(predictions, labels, index)

    def test_empty_index(self):
        with pytest.raises(EvaluationError):
            accuracy([0], [0], [])


class TestLinearProbe:

    def test_one_hot_embeddings_are_perfect(self, labelled):
        labels, splits = labelled
        report = linear_probe(np.eye(3)[labels], labels, splits,
                              ProbeConfig(repeats=3))
        assert report.accuracies == [1.0, 1.0, 1.0]
        assert (report.mean, report.std) == (1.0, 0.0)
        assert report.split_sizes == {'train': 24, 'val': 0, 'test': 6}
        assert report.num_classes == 3 and report.missing_classes == []

    def test_zero_embeddings_bounded_by_prior(self, labelled):
        labels, splits = labelled
        labels = labels.copy()
        labels[:5] = 0
        report = linear_probe(np.zeros((30, 4)), labels, splits,
                              ProbeConfig(repeats=2, epochs=50))
        prior = np.bincount(labels[splits['test']]).max() / 6
        assert report.mean <= prior

    def test_standardize(self, labelled):
        labels, splits = labelled
        z = 100.0 + 0.01 * np.eye(3)[labels]
        report = linear_probe(z, labels, splits,
                              ProbeConfig(repeats=1, standardize=True))
        assert report.mean == 1.0

    def test_repeats_are_deterministic(self, labelled):
        labels, splits = labelled
        z = np.random.default_rng(0).standard_normal((30, 5))
        cfg = ProbeConfig(repeats=2, epochs=30)
        first = linear_probe(z, labels, splits, cfg)
        second = linear_probe(z, labels, splits, cfg)
        assert first.accuracies == second.accuracies

    def test_missing_class_is_reported(self, labelled, capsys):
        labels, splits = labelled
        labels = labels.copy()
        labels[splits['train']] = labels[splits['train']] % 2
        report = linear_probe(np.eye(3)[labels], labels, splits,
                              ProbeConfig(repeats=1, epochs=20))
        assert report.missing_classes == [2]
        assert 'absent from the training split' in capsys.readouterr().out

    def test_needs_labels_and_splits(self, labelled):
        labels, splits = labelled
        with pytest.raises(EvaluationError):
            linear_probe(np.zeros((30, 2)), None, splits, ProbeConfig())
        with pytest.raises(EvaluationError):
            linear_probe(np.zeros((30, 2)), labels, None, ProbeConfig())

    def test_empty_test_split(self, labelled):
        labels, splits = labelled
        with pytest.raises(EvaluationError):
            linear_probe(np.zeros((30, 2)), labels,
                         {**splits, 'test': np.array([], dtype=int)},
                         ProbeConfig())

    def test_encoder_parameters_untouched(self, sbm_fixture):
        params = init_params(sbm_fixture.f, 8, 4, seed=1, bias=True)
        before = params.copy()
        z = embed(sbm_fixture, params)
        linear_probe(z, sbm_fixture.labels, sbm_fixture.splits,
                     ProbeConfig(repeats=2, epochs=20))
        assert params.equals(before)
        assert params.version == before.version

    def test_node_order_does_not_matter(self, labelled):
        labels, splits = labelled
        rng = np.random.default_rng(3)
        z = np.eye(3)[labels] + 0.1 * rng.standard_normal((30, 3))
        order = rng.permutation(30)
        inverse = np.argsort(order)
        cfg = ProbeConfig(repeats=2, epochs=50)
        report = linear_probe(z, labels, splits, cfg)
        shuffled = linear_probe(z[order], labels[order],
                                {name: inverse[index]
                                 for name, index in splits.items()}, cfg)
        assert shuffled.accuracies == report.accuracies

    def test_row_count_mismatch(self, labelled):
        labels, splits = labelled
        with pytest.raises(EvaluationError):
            linear_probe(np.zeros((29, 2)), labels, splits, ProbeConfig())


def test_softmax_cross_entropy_gradient():
    rng = np.random.default_rng(1)
    logits = rng.standard_normal((4, 3))
    targets = np.array([0, 2, 1, 2])
    _, grad = softmax_cross_entropy(logits, targets)
    step = 1e-6
    for index in np.ndindex(logits.shape):
        plus, minus = logits.copy(), logits.copy()
        plus[index] += step
        minus[index] -= step
        numeric = (softmax_cross_entropy(plus, targets)[0] -
                   softmax_cross_entropy(minus, targets)[0]) / (2 * step)
        assert grad[index] == pytest.approx(numeric, abs=1e-7)


def test_report_population_std_and_files(tmp_path):
    report = EvalReport([0.5, 1.0], {'train': 2, 'val': 0, 'test': 2}, 2,
                        [], ProbeConfig())
    assert report.mean == 0.75 and report.std == 0.25
    report.to_json(tmp_path / 'report.json')
    loaded = json.loads((tmp_path / 'report.json').read_text())
    assert loaded['accuracies'] == [0.5, 1.0]
    assert loaded['probe_config']['repeats'] == 5
    report.write_accuracies_csv(tmp_path / 'report.csv')
    with open(tmp_path / 'report.csv', newline='') as open_csv:
        rows = list(csv.reader(open_csv))
    assert rows == [['repeat', 'accuracy'], ['0', '0.5'], ['1', '1.0']]
