import json
import math

import pytest

from quadcf.experiments import (
    ARTIN_HEADER,
    CSV_HEADER,
    DUKE_HEADER,
    DeviationRow,
    DukeRow,
    ScanConfig,
    UsageError,
    artin_scan,
    artin_stats,
    converge_scan,
    converge_stats,
    converge_summary_lines,
    deviation_row_values,
    duke_discs,
    duke_row_values,
    duke_scan,
    duke_stats,
    duke_summary_lines,
    emit,
    order_record_values,
    render_table,
    sequence_values,
    validate_config,
)
from quadcf.class_geodesics import total_length
from quadcf.matrix_orders import INERT, RAMIFIED, SPLIT, OrderRecord
from helpers import brute_pisano, sieve_primes


def test_headers_are_frozen():
    assert CSV_HEADER == (
        "N,is_prime,period_length,pattern,freq_num,freq_den,c_w,deviation,"
        "disc,reg_disc_exponent"
    )
    assert ARTIN_HEADER == "N,ord,exponent,split_type,is_max"
    assert DUKE_HEADER == "disc,h,reg,total_length,exponent"


def test_validate_config_errors():
    good = ScanConfig()
    validate_config(good)
    for bad in [
        ScanConfig(sequence="odds"),
        ScanConfig(bound=1),
        ScanConfig(fmt="xml"),
        ScanConfig(workers=0),
        ScanConfig(patterns=()),
        ScanConfig(patterns=((),)),
        ScanConfig(patterns=((0,),)),
    ]:
        with pytest.raises(UsageError):
            validate_config(bad)
    # pattern checks can be waived for pattern-free scans
    validate_config(ScanConfig(patterns=()), need_patterns=False)


def test_sequence_values():
    assert sequence_values(ScanConfig(bound=10)) == list(range(2, 11))
    assert sequence_values(ScanConfig(bound=30, sequence="primes")) == sieve_primes(30)
    assert sequence_values(ScanConfig(bound=12, coprime_filter=6)) == [5, 7, 11]


def test_converge_scan_first_row_frozen():
    # N=2 on sqrt(2): 2*sqrt(2) = [2; 1,4], so pattern (1) appears once in
    # a period of two, against the cylinder mass log2(4/3); the stabilizer
    # of Z + Z*2*sqrt(2) has conductor 2, disc 32, regulator log(3+2*sqrt 2)
    rows = converge_scan(ScanConfig(bound=4, patterns=((1,),)))
    r = rows[0]
    assert (r.N, r.is_prime, r.period_length, r.pattern) == (2, True, 2, "1")
    assert (r.freq_num, r.freq_den) == (1, 2)
    assert abs(r.c_w - math.log2(4 / 3)) < 1e-15
    assert abs(r.deviation - 0.08496250072115608) < 1e-15
    assert r.disc == 32
    reg = math.log(3 + 2 * math.sqrt(2))
    assert abs(r.reg_disc_exponent - math.log(reg) / math.log(math.sqrt(32))) < 1e-12


def test_converge_scan_row_order_and_multiple_patterns():
    cfg = ScanConfig(bound=10, patterns=((2,), (1, 1)))
    rows = converge_scan(cfg)
    assert [r.N for r in rows] == [n for n in range(2, 11) for _ in range(2)]
    assert [r.pattern for r in rows[:4]] == ["2", "1-1", "2", "1-1"]


def test_converge_scan_parallel_matches_serial():
    cfg = ScanConfig(bound=40, patterns=((1,), (2, 1)))
    serial = converge_scan(cfg)
    parallel = converge_scan(ScanConfig(bound=40, patterns=((1,), (2, 1)), workers=3))
    assert serial == parallel


def test_converge_stats_on_synthetic_decay():
    # deviation exactly N^-1 must fit delta_hat = 1, c_hat = 1
    def row(n, dev):
        return DeviationRow(n, False, 1, "1", 1, 2, 0.5, dev, 0.0, 8, 0.0)

    rows = [row(n, 1.0 / n) for n in range(2, 20)]
    st = converge_stats(rows)["1"]
    assert st["rows"] == 18 and st["zero_deviation_rows"] == 0
    assert abs(st["delta_hat"] - 1.0) < 1e-9
    assert abs(st["c_hat"] - 1.0) < 1e-9
    assert st["frac_below_half_power"] == 1.0
    assert st["dyadic_medians"][1] == pytest.approx(5 / 12)  # median of 1/2, 1/3
    # zero deviations are excluded from the fit but counted
    st2 = converge_stats(rows + [row(25, 0.0)])["1"]
    assert st2["zero_deviation_rows"] == 1 and st2["rows"] == 19
    lines = converge_summary_lines({"1": st})
    assert any("delta_hat=1.000000" in ln for ln in lines)
    assert any(ln.startswith("pattern 1: dyadic_medians") for ln in lines)


def test_artin_scan_orders_match_fibonacci_oracle():
    recs = artin_scan(ScanConfig(d=5, sequence="primes", bound=60))
    assert [r.N for r in recs] == sieve_primes(60)
    for r in recs:
        assert r.ord == brute_pisano(r.N), r.N
        assert abs(r.exponent - math.log(r.ord) / math.log(r.N)) < 1e-12


def test_artin_scan_parallel_matches_serial():
    a = artin_scan(ScanConfig(d=5, bound=80))
    b = artin_scan(ScanConfig(d=5, bound=80, workers=4))
    assert a == b


def test_artin_stats_handmade():
    recs = [
        OrderRecord(7, 16, math.log(16) / math.log(7), INERT, True),
        OrderRecord(11, 10, math.log(10) / math.log(11), SPLIT, True),
        OrderRecord(5, 20, math.log(20) / math.log(5), RAMIFIED, None),
        OrderRecord(29, 14, math.log(14) / math.log(29), SPLIT, False),
    ]
    st = artin_stats(recs)
    assert set(st["densities"]) == {0.7, 0.8, 0.9}
    # ord >= N^0.8 for 16>7^.8, 10>11^.8(6.8), 20>5^.8, 14<29^.8(14.8)
    assert st["densities"][0.8] == 3 / 4
    assert st["exceptions"] == [29]
    # all prime records count in the denominator; the ramified one can
    # never be maximal (is_max None)
    assert st["prime_max_density"] == 2 / 4


def test_duke_discs():
    assert duke_discs(5, 21, False) == [5, 8, 12, 13, 17, 20, 21]  # no square 16
    assert duke_discs(5, 21, True) == [5, 8, 12, 13, 17, 21]
    assert duke_discs(-10, 8, False) == [5, 8]
    with pytest.raises(UsageError):
        duke_discs(10, 5, False)
    with pytest.raises(UsageError):
        duke_discs(26, 27, False)  # 2 and 3 mod 4 only


def test_duke_scan_rows():
    rows = duke_scan(5, 60, fundamental_only=True)
    by_disc = {r.disc: r for r in rows}
    assert by_disc[40].h == 2
    assert abs(by_disc[40].exponent - total_length(40).exponent) < 1e-15
    for r in rows:
        assert abs(r.total - r.h * r.reg) < 1e-12


def test_duke_stats_handmade():
    rows = [
        DukeRow(16 + i, 1, 1.0, 1.0, 0.5 + 0.1 * i) for i in range(3)  # k = 4
    ] + [DukeRow(40, 2, 1.0, 2.0, 1.1)]  # k = 5
    st = duke_stats(rows)
    assert set(st["blocks"]) == {4, 5}
    assert st["blocks"][4]["n"] == 3
    assert st["blocks"][4]["mean"] == pytest.approx(0.6)
    assert st["median_exponent"] == pytest.approx(0.65)  # of 0.5 0.6 0.7 1.1
    lines = duke_summary_lines(st)
    assert lines[-1].startswith("median_exponent:")


def test_render_table_csv_and_json():
    header = "a,b,c"
    rows = [[1, True, None], [2, 0.5, "x"]]
    assert render_table(header, rows, "csv") == "a,b,c\n1,true,\n2,0.5,x\n"
    parsed = json.loads(render_table(header, rows, "json"))
    assert parsed == [
        {"a": 1, "b": True, "c": None},
        {"a": 2, "b": 0.5, "c": "x"},
    ]


def test_row_value_orders_match_headers():
    dr = DeviationRow(2, True, 2, "1", 1, 2, 0.4, 0.1, 0.7, 32, 0.3)
    assert len(deviation_row_values(dr)) == len(CSV_HEADER.split(","))
    orc = OrderRecord(7, 16, 1.42, INERT, True)
    assert order_record_values(orc) == [7, 16, 1.42, "inert", True]
    du = DukeRow(40, 2, 1.8, 3.6, 0.7)
    assert duke_row_values(du) == [40, 2, 1.8, 3.6, 0.7]


def test_emit_to_file_and_stream(tmp_path, capsys):
    target = tmp_path / "out.csv"
    emit("hello\n", str(target))
    assert target.read_text() == "hello\n"
    emit("to-stdout\n", None)
    assert capsys.readouterr().out == "to-stdout\n"
