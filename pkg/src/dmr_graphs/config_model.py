from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, PositiveInt, model_validator
from typing import Optional


class SpectralSettings(BaseModel):
    tol: PositiveFloat = 1e-12
    cluster_tol: PositiveFloat = 1e-6
    interlacing_tol: PositiveFloat = 1e-6


class PolynomialSettings(BaseModel):
    degenerate_tol: PositiveFloat = 1e-9
    gram_tol: PositiveFloat = 1e-6
    fourier_tol: PositiveFloat = 1e-6


class ReportSettings(BaseModel):
    model_config = ConfigDict(populate_by_name=True)
    float_digits: PositiveInt = 12
    schema_name: str = Field(default="dmr-report/1", alias="schema")
    output_dir: str = "reports"


class SearchSettings(BaseModel):
    budget: PositiveInt = 2000
    min_order: PositiveInt = 5
    max_order: PositiveInt = 12
    seed: int = 2024

    @model_validator(mode="after")
    def _check_orders(self) -> "SearchSettings":
        if self.min_order > self.max_order:
            raise ValueError("min_order must not exceed max_order")
        return self


class LoggingSettings(BaseModel):
    level: str = "INFO"
    format: str = "console"
    file: Optional[str] = "logs/dmr_tool.log"
    config_file: Optional[str] = None


class Config(BaseModel):
    spectral: SpectralSettings = SpectralSettings()
    polynomials: PolynomialSettings = PolynomialSettings()
    report: ReportSettings = ReportSettings()
    search: SearchSettings = SearchSettings()
    logging: LoggingSettings = LoggingSettings()
