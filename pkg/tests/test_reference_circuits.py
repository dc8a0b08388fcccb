import math
from pathlib import Path

import numpy as np
import pytest

from entgeo.circuit import Circuit, GateKind, export_qasm
from entgeo.errors import MappingError
from entgeo.geometry import AreaMode, area2d_detector, cross3d_detectors, det_detector
from entgeo.reference_circuits import (
    LISTING2_BLOCK_OFFSETS,
    QubitMapping,
    audit_reference_circuits,
    format_reports,
    listing1_circuit,
    listing2_circuit,
    listing3_circuit,
    verify_preparation,
)
from entgeo.simulator import run
from entgeo.states import SparseState

DATA = Path(__file__).parent / "data"

H, X, Z, CX, CCX, BARRIER = (
    GateKind.H,
    GateKind.X,
    GateKind.Z,
    GateKind.CX,
    GateKind.CCX,
    GateKind.BARRIER,
)


def op_shapes(circuit):
    return [(g.kind, g.targets, g.controls) for g in circuit.ops]


def touched_qubits(circuit):
    touched = set()
    for g in circuit.ops:
        if g.kind is not GateKind.BARRIER:
            touched.update(g.targets)
            touched.update(g.controls)
    return touched


class TestTranscriptions:
    """The builders are frozen transcriptions; any drift is a test failure."""

    def test_listing1_ops(self):
        expected = [
            (H, (0,), ()),
            (BARRIER, (0, 1, 2, 3), ()),
            (CX, (1,), (0,)),
            (CX, (2,), (0,)),
            (CX, (3,), (0,)),
            (BARRIER, (0, 1, 2, 3), ()),
            (X, (1,), ()),
            (X, (3,), ()),
            (Z, (0,), ()),
        ]
        assert op_shapes(listing1_circuit()) == expected

    def test_listing2_ops(self):
        all_wires = tuple(range(18))
        expected = [
            (H, (0,), ()),
            (BARRIER, all_wires, ()),
            (CX, (1,), (0,)),
            (CX, (2,), (0,)),
            (CX, (3,), (0,)),
            (CX, (4,), (0,)),
            (CX, (5,), (0,)),
            (BARRIER, all_wires, ()),
            (X, (1,), ()),
            (X, (4,), ()),
            (Z, (0,), ()),
            (BARRIER, all_wires, ()),
            (H, (6,), ()),
            (BARRIER, all_wires, ()),
            (CX, (11,), (6,)),
            (CX, (10,), (7,)),
            (BARRIER, all_wires, ()),
            (X, (6,), ()),
            (X, (11,), ()),
            (Z, (6,), ()),
            (BARRIER, all_wires, ()),
            (H, (12,), ()),
            (BARRIER, all_wires, ()),
            (CX, (17,), (13,)),
            (CX, (16,), (14,)),
            (BARRIER, all_wires, ()),
            (X, (13,), ()),
            (X, (16,), ()),
            (Z, (13,), ()),
            (BARRIER, all_wires, ()),
        ]
        assert op_shapes(listing2_circuit()) == expected

    def test_listing3_ops(self):
        expected = [
            (H, (0,), ()),
            (H, (1,), ()),
            (H, (2,), ()),
            (X, (1, 2), ()),
            (CCX, (3,), (0, 1)),
            (CCX, (7,), (0, 2)),
            (X, (1, 2), ()),
            (X, (0, 2), ()),
            (CCX, (4,), (1, 0)),
            (CCX, (6,), (1, 2)),
            (Z, (1,), ()),
            (X, (0, 2), ()),
            (X, (0, 1), ()),
            (CCX, (5,), (2, 0)),
            (CCX, (6,), (2, 1)),
            (CX, (8,), (2,)),
            (X, (0, 1), ()),
        ]
        assert op_shapes(listing3_circuit()) == expected

    def test_op_counts(self):
        assert listing1_circuit().num_ops() == 7
        assert listing2_circuit().num_ops() == 21
        assert listing3_circuit().num_ops() == 17

    def test_listing2_untouched_wires(self):
        assert touched_qubits(listing2_circuit()) == set(range(18)) - {8, 9, 15}

    def test_outputs_are_normalized(self):
        for builder in (listing1_circuit, listing2_circuit, listing3_circuit):
            state = run(builder())
            assert abs(state.norm() - 1.0) <= 1e-12

    def test_listing1_golden_qasm(self):
        golden = (DATA / "listing1_golden.qasm").read_text()
        assert export_qasm(listing1_circuit()).text == golden


class TestQubitMapping:
    def test_identity(self):
        assert QubitMapping.identity(3).pairs == ((1, 0), (2, 1), (3, 2))

    def test_block(self):
        assert QubitMapping.block(2, 5).pairs == ((1, 5), (2, 6))

    def test_qubit_for(self):
        mapping = QubitMapping.block(3, 4)
        assert [mapping.qubit_for(v) for v in (1, 2, 3)] == [4, 5, 6]
        with pytest.raises(MappingError):
            mapping.qubit_for(4)

    def test_variables_must_be_dense_from_one(self):
        with pytest.raises(MappingError):
            QubitMapping(((1, 0), (3, 1)))

    def test_qubits_must_be_distinct(self):
        with pytest.raises(MappingError):
            QubitMapping(((1, 2), (2, 2)))

    def test_qubits_must_be_non_negative(self):
        with pytest.raises(MappingError):
            QubitMapping(((1, -1),))

    def test_mapping_must_fit_circuit(self):
        with pytest.raises(MappingError):
            verify_preparation(
                listing1_circuit(), cross3d_detectors()[0], "A1", QubitMapping.identity(6)
            )

    def test_mapping_must_cover_target(self):
        with pytest.raises(MappingError):
            verify_preparation(
                listing1_circuit(),
                area2d_detector(AreaMode.PAPER_LITERAL),
                "A",
                QubitMapping.identity(2),
            )


class TestVerifyPreparation:
    def test_single_qubit_pass(self):
        qc = Circuit(1)
        qc.x(0)
        report = verify_preparation(qc, SparseState.from_terms(1, {1: 1.0}), "one")
        assert report.passed
        assert report.fidelity == pytest.approx(1.0, abs=1e-12)
        assert report.global_phase == pytest.approx(1.0 + 0.0j, abs=1e-12)
        assert report.prepared_support == (("1", (1 + 0j)),)

    def test_embedding_into_wider_register(self):
        qc = Circuit(4)
        qc.x(2)
        target = SparseState.from_terms(1, {1: 1.0})
        report = verify_preparation(qc, target, "one", QubitMapping(((1, 2),)))
        assert report.passed

    def test_unmapped_qubits_must_stay_zero(self):
        qc = Circuit(4)
        qc.x(2)
        qc.x(0)
        target = SparseState.from_terms(1, {1: 1.0})
        report = verify_preparation(qc, target, "one", QubitMapping(((1, 2),)))
        assert not report.passed
        assert report.fidelity == pytest.approx(0.0, abs=1e-12)
        assert report.global_phase is None

    def test_failure_reports_instead_of_raising(self):
        qc = Circuit(2)
        qc.h(0)
        report = verify_preparation(qc, SparseState.from_terms(2, {3: 1.0}), "both")
        assert not report.passed
        assert report.fidelity == pytest.approx(0.0, abs=1e-12)

    def test_fidelity_ignores_target_phase(self):
        detector = area2d_detector(AreaMode.PAPER_LITERAL)
        base = verify_preparation(listing1_circuit(), detector, "A")
        for phi in (0.3, 1.1, 2.9):
            rotated = SparseState.from_terms(
                4, {i: c * np.exp(1j * phi) for i, c in detector.terms}
            )
            report = verify_preparation(listing1_circuit(), rotated, "A")
            assert report.fidelity == pytest.approx(base.fidelity, abs=1e-12)
            assert report.passed


class TestAudit:
    def test_report_names_and_widths(self):
        reports = audit_reference_circuits()
        assert [(r.target_name, r.num_qubits) for r in reports] == [
            ("A", 4),
            ("A1", 18),
            ("A2", 18),
            ("A3", 18),
            ("V", 9),
        ]

    def test_area_preparation_passes_with_phase_minus_one(self):
        report = audit_reference_circuits()[0]
        assert report.passed
        assert report.fidelity == pytest.approx(1.0, abs=1e-12)
        assert report.global_phase == pytest.approx(-1.0 + 0.0j, abs=1e-12)
        labels = [label for label, _ in report.prepared_support]
        amps = np.array([amp for _, amp in report.prepared_support])
        assert labels == ["0101", "1010"]
        np.testing.assert_allclose(amps, [-1 / math.sqrt(2), 1 / math.sqrt(2)], atol=1e-12)

    def test_cross_and_volume_preparations_fail(self):
        for report in audit_reference_circuits()[1:]:
            assert not report.passed
            assert report.fidelity == pytest.approx(0.0, abs=1e-12)
            assert report.global_phase is None

    def test_listing2_support_shape(self):
        # One 8-branch state shared by all three block reports.
        for report in audit_reference_circuits()[1:4]:
            assert len(report.prepared_support) == 8
            amps = np.array([amp for _, amp in report.prepared_support])
            np.testing.assert_allclose(np.abs(amps), (1 / math.sqrt(2)) ** 3, atol=1e-12)

    def test_listing3_support_shape(self):
        report = audit_reference_circuits()[4]
        assert len(report.prepared_support) == 8
        amps = np.array([amp for _, amp in report.prepared_support])
        np.testing.assert_allclose(np.abs(amps), 1 / math.sqrt(8), atol=1e-12)
        indices = [int(label, 2) for label, _ in report.prepared_support]
        assert indices == [0, 82, 137, 195, 263, 310, 333, 356]

    def test_volume_target_and_preparation_share_no_index(self):
        # The fidelity is exactly zero because the supports are disjoint.
        report = audit_reference_circuits()[4]
        prepared = {int(label, 2) for label, _ in report.prepared_support}
        target = {index for index, _ in det_detector(3).terms}
        assert prepared & target == set()

    def test_block_offsets_are_frozen(self):
        assert LISTING2_BLOCK_OFFSETS == (0, 6, 12)


class TestReportFormatting:
    def test_matches_golden_fixture(self):
        golden = (DATA / "verify_report_golden.txt").read_text()
        assert format_reports(audit_reference_circuits()) == golden

    def test_two_audits_render_identically(self):
        first = format_reports(audit_reference_circuits())
        second = format_reports(audit_reference_circuits())
        assert first == second

    def test_no_negative_zero_in_rendering(self):
        text = format_reports(audit_reference_circuits())
        assert "-0.000000000000" not in text

    def test_block_layout(self):
        text = format_reports(audit_reference_circuits())
        blocks = text.rstrip("\n").split("\n\n")
        assert len(blocks) == 5
        for block in blocks:
            lines = block.split("\n")
            assert lines[0].startswith("target: ")
            assert lines[1].startswith("qubits: ")
            assert lines[2].startswith("fidelity: ")
            assert lines[3].startswith("global_phase: ")
            assert lines[4].startswith("passed: ")
            assert lines[5] == "prepared_support:"
            assert all(line.startswith("  |") for line in lines[6:])
        assert text.endswith("\n")
