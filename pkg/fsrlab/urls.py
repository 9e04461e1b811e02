from django.urls import path, include

urlpatterns = [
    # JSON endpoints over the synthesis pipeline
    path("api/", include(("binmach.urls", "binmach"), namespace="binmach")),
]
