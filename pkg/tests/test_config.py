import pytest

from config import DevelopmentConfig, ProductionConfig, TestingConfig, get_config


def test_profiles_by_name():
    assert get_config('testing') is TestingConfig
    assert get_config('unknown') is DevelopmentConfig


def test_profile_from_environment(monkeypatch):
    monkeypatch.setenv('APP_ENV', 'testing')
    assert get_config() is TestingConfig


def test_testing_profile_is_quiet():
    logging_config = TestingConfig.get_logging_config()
    assert not logging_config['file_enabled']
    assert logging_config['loki_labels'] is None
    assert TestingConfig.get_scan_config()['jobs'] == 1


def test_production_rejects_a_cap_below_the_first_degree(monkeypatch):
    monkeypatch.setattr(ProductionConfig, 'COLENGTH_CAP', 1)
    with pytest.raises(ValueError):
        get_config('production')


def test_production_rejects_zero_workers(monkeypatch):
    monkeypatch.setattr(ProductionConfig, 'MAX_SCAN_WORKERS', 0)
    with pytest.raises(ValueError, match='MAX_SCAN_WORKERS'):
        get_config('production')
