import pytest

from src.GENERAL.exceptions import InvalidParameterError
from src.PHY.lora_phy import (
    RadioConfig,
    airtime_table,
    lock_window_symbols,
    packet_airtime,
    parse_coding_rate,
    payload_symbols,
    symbol_time,
    vulnerability_window,
)

# Таблица параметров по умолчанию: BW 125 кГц, n_p = 6, PL = 20, H = 0, DE = 0, CR 4/5
PAYLOAD_SYMBOLS = {6: 48, 7: 43, 8: 38, 9: 33, 10: 33, 11: 28, 12: 28}
WINDOWS = {
    6: 0.035072,
    7: 0.065024,
    8: 0.119808,
    9: 0.219136,
    10: 0.438272,
    11: 0.794624,
    12: 1.589248,
}


@pytest.mark.parametrize("sf, expected", PAYLOAD_SYMBOLS.items())
def test_payload_symbols_default_radio(sf, expected):
    assert payload_symbols(sf, RadioConfig()) == expected


def test_sf12_airtime_parts():
    a = packet_airtime(12, RadioConfig())
    assert a.symbol_s == pytest.approx(0.032768, rel=1e-12)
    assert a.preamble_s == pytest.approx(0.335872, rel=1e-12)
    assert a.payload_s == pytest.approx(0.917504, rel=1e-12)
    assert a.total_s == pytest.approx(1.253376, rel=1e-12)
    assert a.lock_window_s == pytest.approx(0.335872, rel=1e-12)


def test_sf7_airtime_parts():
    a = packet_airtime(7, RadioConfig())
    assert a.preamble_s == pytest.approx(0.010496, rel=1e-12)
    assert a.payload_s == pytest.approx(0.044032, rel=1e-12)
    assert a.total_s == pytest.approx(0.054528, rel=1e-12)


@pytest.mark.parametrize("sf, expected", WINDOWS.items())
def test_vulnerability_window(sf, expected):
    assert vulnerability_window(sf, RadioConfig()) == pytest.approx(expected, rel=1e-12)


def test_lock_window_is_preamble():
    radio = RadioConfig(n_preamble_extra=8)
    assert lock_window_symbols(radio) == 12.25
    a = packet_airtime(9, radio)
    assert a.lock_window_s == pytest.approx(a.preamble_s)
    assert a.vulnerability_s == pytest.approx(a.total_s + a.lock_window_s)


def test_payload_symbols_variants():
    assert payload_symbols(7, RadioConfig(low_rate_opt=1)) == 53
    assert payload_symbols(12, RadioConfig(header_flag=1)) == 23
    assert payload_symbols(12, RadioConfig(cr_code=4)) == 40
    # отрицательный числитель обрезается до нуля: остаются 8 базовых символов
    assert payload_symbols(12, RadioConfig(payload_bytes=0)) == 8


def test_symbol_time_and_errors():
    assert symbol_time(6, 125_000) == pytest.approx(0.000512)
    for sf in range(6, 12):
        assert symbol_time(sf + 1, 125_000) == pytest.approx(2 * symbol_time(sf, 125_000), rel=1e-14)
    with pytest.raises(InvalidParameterError):
        symbol_time(5, 125_000)
    with pytest.raises(InvalidParameterError):
        symbol_time(13, 125_000)
    with pytest.raises(InvalidParameterError):
        symbol_time(7, 0)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"bandwidth_hz": 0},
        {"cr_code": 5},
        {"header_flag": 2},
        {"low_rate_opt": -1},
        {"payload_bytes": -1},
        {"n_preamble_extra": -2},
    ],
)
def test_radio_config_validation(kwargs):
    with pytest.raises(InvalidParameterError):
        RadioConfig(**kwargs)


@pytest.mark.parametrize(
    "value, code",
    [("4/5", 1), ("4/6", 2), (" 4 / 7 ", 3), ("4/8", 4), (1, 1), ("3", 3)],
)
def test_parse_coding_rate(value, code):
    assert parse_coding_rate(value) == code


@pytest.mark.parametrize("value", ["4/9", "0", "x", 5])
def test_parse_coding_rate_rejects(value):
    with pytest.raises(InvalidParameterError):
        parse_coding_rate(value)


def test_airtime_table_covers_all_sf():
    table = airtime_table(RadioConfig())
    assert [a.sf for a in table] == list(range(6, 13))
    assert all(a.total_s < b.total_s for a, b in zip(table, table[1:]))
