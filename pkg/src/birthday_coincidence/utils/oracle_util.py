from birthday_coincidence.errors import InvalidParamsError
from birthday_coincidence.oracle.common_oracle_interface import OracleInterface
from birthday_coincidence.oracle.dp import DPOracle
from birthday_coincidence.oracle.exhaustive import ExhaustiveOracle


def get_oracle(oracle_type: str) -> OracleInterface:
    if oracle_type == "dp":
        return DPOracle()
    elif oracle_type == "exhaustive":
        return ExhaustiveOracle()
    else:
        raise InvalidParamsError(f"Invalid oracle type: {oracle_type}")
