#!/usr/bin/env python3

# Standard libraries
import pytest
import pathlib
import shutil
import os
import sys
from typing import Generator

# Internal libraries
from .test_constants import *
from local_config import LocalConfig
from core.polyhedra import PolyhedronCombinatorics, catalog

########################################################################
#                          Assets arrangement                          #
########################################################################


@pytest.fixture
def arrange_assets():
    """
    This pytest fixture prepares the test assets. It removes any existing
    old test asset folders and creates a new one.
    """
    assets_src = pathlib.Path(TEST_ASSETS_SRC_FOLDER)
    assets_dst = pathlib.Path(TEST_ASSETS_DST_FOLDER)

    if not assets_src.exists():
        raise FileNotFoundError(
            f"Test assets folder not found at '{assets_src.resolve()}'."
        )

    if assets_dst.exists():

        def remove_readonly(func, path, exc_info):  # type: ignore
            """
            Changes the file attribute and retries deletion if permission is denied.
            """
            os.chmod(path, 0o777)  # type: ignore # Grant full permissions
            func(path)  # Retry the function

        # Remove old test assets folder
        if sys.version_info >= (3, 12):
            shutil.rmtree(assets_dst, onexc=remove_readonly)  # type: ignore
        else:
            shutil.rmtree(assets_dst, onerror=remove_readonly)  # type: ignore

    shutil.copytree(assets_src, assets_dst)


########################################################################
#                             Configuration                            #
########################################################################


@pytest.fixture(autouse=True)
def fresh_config() -> Generator[None, None, None]:
    """
    Every test starts without a loaded configuration, so that commands
    fall back to the schema defaults unless the test loads its own.
    """
    LocalConfig.reset()
    yield
    LocalConfig.reset()


@pytest.fixture
def default_config(monkeypatch: pytest.MonkeyPatch) -> LocalConfig:
    """
    Schema defaults, environment overrides cleared.
    """
    monkeypatch.delenv("IDEALGROWTH_TOLERANCE", raising=False)
    monkeypatch.delenv("IDEALGROWTH_ELEMENT_CAP", raising=False)
    return LocalConfig()


########################################################################
#                            Catalog models                            #
########################################################################


@pytest.fixture(params=CATALOG)
def catalog_model(request: pytest.FixtureRequest) -> PolyhedronCombinatorics:
    """
    Each built-in model in turn.
    """
    return catalog(request.param)


@pytest.fixture(params=[name for name in CATALOG if name != "OCT"])
def non_right_angled(request: pytest.FixtureRequest) -> PolyhedronCombinatorics:
    return catalog(request.param)
